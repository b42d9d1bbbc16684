#include "calex/cgroup.hpp"

#include <algorithm>
#include <numeric>

#include "calex/errors.hpp"

namespace calex {

// -------------------------------------------------------------------- Word

Word Word::letter(int gen, int exp) {
    Word w;
    w.append(gen, exp);
    return w;
}

void Word::append(int gen, int exp) {
    if (gen <= 0) throw Error("BadArgument", "generator index must be positive", EXIT_INTERNAL);
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

void Word::append(const Word& w) {
    for (const Letter& l : w.letters_) append(l.gen, l.exp);
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
    return w;
}

Word Word::operator*(const Word& w) const {
    Word r = *this;
    r.append(w);
    return r;
}

Word Word::pow(int e) const {
    Word base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Word r;
    for (int i = 0; i < n; ++i) r.append(base);
    return r;
}

long Word::exponent_sum() const {
    long s = 0;
    for (const Letter& l : letters_) s += l.exp;
    return s;
}

int Word::max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

std::vector<Letter> Word::atoms() const {
    std::vector<Letter> out;
    for (const Letter& l : letters_) {
        int sgn = l.exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(l.exp); ++i) out.push_back({l.gen, sgn});
    }
    return out;
}

Word Word::from_atoms(const std::vector<Letter>& atoms) {
    Word w;
    for (const Letter& a : atoms) w.append(a.gen, a.exp);
    return w;
}

// ----------------------------------------------------------- CPresentation

CPresentation::CPresentation(int num_generators, std::vector<ConjRelation> relations)
    : m_(num_generators), rels_(std::move(relations)) {
    validate();
}

void CPresentation::add_relation(ConjRelation r) {
    rels_.push_back(std::move(r));
    validate();
}

void CPresentation::validate() const {
    if (m_ <= 0) throw Error("BadArgument", "presentation needs at least one generator", EXIT_REFUSED);
    for (const ConjRelation& r : rels_) {
        if (r.left < 1 || r.left > m_ || r.right < 1 || r.right > m_ ||
            r.conjugator.max_generator() > m_)
            throw Error("BadArgument", "relation uses a generator outside 1..m", EXIT_REFUSED);
    }
}

int irreducible_components(const CPresentation& g) {
    int m = g.num_generators();
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const ConjRelation& r : g.relations()) {
        int a = find(r.left - 1), b = find(r.right - 1);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    int classes = 0;
    for (int i = 0; i < m; ++i)
        if (find(i) == i) ++classes;
    return classes;
}

Word full_product_word(int m) {
    Word w;
    for (int i = 1; i <= m; ++i) w.append(i, 1);
    return w;
}

bool is_hurwitz_presentation(const CPresentation& g) {
    Word full = full_product_word(g.num_generators());
    for (int i = 1; i <= g.num_generators(); ++i) {
        bool found = false;
        for (const ConjRelation& r : g.relations())
            if (r.left == i && r.right == i && r.conjugator == full) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

Word shifted(const Word& w, int offset) {
    Word out;
    for (const Letter& l : w.letters()) out.append(l.gen + offset, l.exp);
    return out;
}

ConjRelation shifted(const ConjRelation& r, int offset) {
    return {r.left + offset, r.right + offset, shifted(r.conjugator, offset)};
}

}  // namespace

CPresentation hurwitz_product(const CPresentation& g1, const CPresentation& g2) {
    int m1 = g1.num_generators(), m2 = g2.num_generators();
    std::vector<ConjRelation> rels = g1.relations();
    for (const ConjRelation& r : g2.relations()) rels.push_back(shifted(r, m1));

    // Identify the last generator of each factor.
    rels.push_back({m1, m1 + m2, Word()});

    // Factor-1 generators commute with (full product of factor 2)^m1 and
    // conversely; the last generator of each factor is covered through the
    // identification.
    Word p2;
    for (int i = 1; i <= m2; ++i) p2.append(m1 + i, 1);
    Word p2_pow = p2.pow(m1);
    for (int j = 1; j <= m1 - 1; ++j) rels.push_back({j, j, p2_pow});

    Word p1 = full_product_word(m1);
    Word p1_pow = p1.pow(m2);
    for (int j = 1; j <= m2 - 1; ++j) rels.push_back({m1 + j, m1 + j, p1_pow});

    return CPresentation(m1 + m2, std::move(rels));
}

// ---------------------------------------------------------------- builtins

CPresentation builtin_free(int m) {
    if (m < 1) throw UnknownBuiltin("free(m) needs m >= 1");
    return CPresentation(m, {});
}

CPresentation builtin_abelian(int n) {
    if (n < 1) throw UnknownBuiltin("abelian(n) needs n >= 1");
    std::vector<ConjRelation> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rels.push_back({i, i, Word::letter(j)});
    Word full = full_product_word(n);
    for (int i = 1; i <= n; ++i) rels.push_back({i, i, full});
    return CPresentation(n, std::move(rels));
}

CPresentation builtin_g2() {
    std::vector<ConjRelation> rels;
    // x2^2 x1 x2^-2 = x4
    rels.push_back({4, 1, Word::letter(2, -2)});
    // x3 = x2
    rels.push_back({3, 2, Word()});
    // x4^2 x2 x4^-2 = x2
    rels.push_back({2, 2, Word::letter(4, -2)});
    Word full = full_product_word(4);
    for (int i = 1; i <= 4; ++i) rels.push_back({i, i, full});
    return CPresentation(4, std::move(rels));
}

CPresentation builtin_example_4_1() {
    std::vector<ConjRelation> rels;
    // x3 = x1^-1 x2 x1
    rels.push_back({3, 2, Word::letter(1)});
    // x3 = x1^-1 x3 x2 x3^-1 x1, i.e. w^-1 x2 w with w = x3^-1 x1
    Word w = Word::letter(3, -1) * Word::letter(1);
    rels.push_back({3, 2, w});
    return CPresentation(3, std::move(rels));
}

CPresentation builtin_example_4_2() {
    std::vector<ConjRelation> rels;
    // x3 = x1^-1 x2 x1
    rels.push_back({3, 2, Word::letter(1)});
    // [x1, x3^2 x1^-1 x2 x1^-1 x3] = 1
    Word w = Word::letter(3, 2) * Word::letter(1, -1) * Word::letter(2) * Word::letter(1, -1) *
             Word::letter(3);
    rels.push_back({1, 1, w});
    return CPresentation(3, std::move(rels));
}

CPresentation builtin(const std::string& name) {
    std::string base = name;
    int param = -1;
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        base = name.substr(0, colon);
        try {
            param = std::stoi(name.substr(colon + 1));
        } catch (...) {
            throw UnknownBuiltin("bad parameter in builtin name '" + name + "'");
        }
    }
    if (base == "free") {
        if (param < 0) throw UnknownBuiltin("free needs a parameter, e.g. free:2");
        return builtin_free(param);
    }
    if (base == "abelian") {
        if (param < 0) throw UnknownBuiltin("abelian needs a parameter, e.g. abelian:3");
        return builtin_abelian(param);
    }
    if (param >= 0) throw UnknownBuiltin("builtin '" + base + "' takes no parameter");
    if (base == "g2") return builtin_g2();
    if (base == "example_4_1") return builtin_example_4_1();
    if (base == "example_4_2") return builtin_example_4_2();
    throw UnknownBuiltin("unknown builtin '" + name + "'");
}

}  // namespace calex
