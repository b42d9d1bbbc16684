#ifndef CALEX_CGROUP_HPP
#define CALEX_CGROUP_HPP

#include <string>
#include <vector>

#include "calex/poly.hpp"

namespace calex {

/// One syllable of a free-group word: generator index (1-based) raised to a
/// nonzero exponent.
struct Letter {
    int gen;
    int exp;
    bool operator==(const Letter&) const = default;
};

/// Freely reduced word in the generators; the empty word is the identity.
class Word {
public:
    Word() = default;
    static Word letter(int gen, int exp = 1);

    void append(int gen, int exp);  // reduces on the fly
    void append(const Word& w);
    Word inverse() const;
    Word operator*(const Word& w) const;
    Word pow(int e) const;

    bool is_identity() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    long exponent_sum() const;
    int max_generator() const;  // 0 for the identity
    bool operator==(const Word&) const = default;

    /// Atomic view: each letter with exponent +-1.
    std::vector<Letter> atoms() const;
    static Word from_atoms(const std::vector<Letter>& atoms);

private:
    std::vector<Letter> letters_;
};

/// The relation x_left = conjugator^-1 x_right conjugator. An empty
/// conjugator encodes the identification x_left = x_right.
struct ConjRelation {
    int left = 0;
    int right = 0;
    Word conjugator;
    bool operator==(const ConjRelation&) const = default;
};

/// Presentation with conjugation relations only.
class CPresentation {
public:
    CPresentation() = default;
    CPresentation(int num_generators, std::vector<ConjRelation> relations);

    int num_generators() const { return m_; }
    const std::vector<ConjRelation>& relations() const { return rels_; }
    void add_relation(ConjRelation r);
    bool operator==(const CPresentation&) const = default;

private:
    void validate() const;
    int m_ = 0;
    std::vector<ConjRelation> rels_;
};

/// Rank of G/G': the number of generator classes under "left ~ right" over
/// all relations.
int irreducible_components(const CPresentation& g);

/// Syntactic test: every generator i has a relation x_i = w^-1 x_i w with w
/// exactly the full ordered product x_1 ... x_m.
bool is_hurwitz_presentation(const CPresentation& g);

Word full_product_word(int m);

/// Product of two presentations: disjoint generators, both relation sets,
/// identification of the last generator of each factor, and centrality of
/// each factor's generators over the m_i-th power of the other factor's full
/// product. Matches the classical construction for factors whose full
/// product is central.
CPresentation hurwitz_product(const CPresentation& g1, const CPresentation& g2);

/// Built-in presentations: free(m), abelian(n), g2(), example_4_1(),
/// example_4_2(). `name` may carry a parameter as "free:2" / "abelian:3".
CPresentation builtin(const std::string& name);

CPresentation builtin_free(int m);
CPresentation builtin_abelian(int n);
CPresentation builtin_g2();
CPresentation builtin_example_4_1();
CPresentation builtin_example_4_2();

}  // namespace calex

#endif
