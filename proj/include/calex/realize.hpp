#ifndef CALEX_REALIZE_HPP
#define CALEX_REALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "calex/alexmod.hpp"
#include "calex/cgroup.hpp"
#include "calex/linalg.hpp"
#include "calex/poly.hpp"

namespace calex {

/// Normal form for targets and computed values: leading coefficient
/// (-1)^degree and nonzero constant term. Strips +-t^a units and records
/// what was stripped.
struct CanonicalTarget {
    IntPoly poly;
    std::string note;  // empty when the input was already canonical
};
CanonicalTarget det_convention_normalize(const IntPoly& p);

/// The group Z^d x| F_1 built from a monic psi with psi(0) = +-1: the free
/// part is Z[t]/(psi) with x_0-conjugation acting as multiplication by t.
/// Elements are pairs (v, e) meaning mu(v) * x_0^e.
class SemidirectModel {
public:
    explicit SemidirectModel(IntPoly psi_monic);

    struct Element {
        std::vector<Int> v;
        long e = 0;
        bool operator==(const Element&) const = default;
    };

    int dim() const { return d_; }
    const IntPoly& psi() const { return psi_; }
    const IntMatrix& h0() const { return h0_; }

    Element identity() const;
    Element x0(long power = 1) const;
    Element mu(std::vector<Int> v) const;
    Element mul(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    Element conjugate(const Element& a, const Element& g) const;  // g^-1 a g
    Element power(const Element& a, long e) const;

    std::vector<Int> reduce_poly(const IntPoly& p) const;  // p mod psi, coefficient vector
    std::vector<Int> tpow_vector(long k) const;            // t^k mod psi, any sign of k

    /// Image of presentation generator i: x_1 -> x_0, x_i -> mu(t^(i-2)) x_0.
    Element generator_image(int i) const;
    Element word_image(const Word& w) const;

    /// x_P = x_0 * mu(P mod psi).
    Element x_poly(const IntPoly& p) const;

private:
    std::vector<Int> apply_h0_power(std::vector<Int> v, long e) const;
    IntPoly psi_;
    int d_;
    IntMatrix h0_, h0_inv_;
};

/// A presentation together with a word W, provably central in the presented
/// group, whose letter count is the degree of the underlying Hurwitz
/// structure. Products chain through this data.
struct HurwitzFactor {
    CPresentation pres;
    Word central_word;
    long expanded_degree = 0;
};

struct ConstructionStep {
    std::string kind;  // "unit", "thm1-layer", "reducible-layer", "g2", "abelian", "product"
    IntPoly target;    // canonical target of this step
    int k = 0;
    int d = 0;
    IntPoly conjugator_poly;                // the P with psi = (t-1)P + 1 (thm1 layers)
    std::string conjugator_word;            // printed w_{1,0}
    std::vector<std::string> kernel_words;  // printed centralized kernel generators
    int generators = 0;
};

struct RealizationCertificate {
    IntPoly target;  // canonical form
    std::string normalization;
    CPresentation presentation;
    IntPoly computed_delta;
    int components = 0;
    Word central_word;
    long expanded_degree = 0;
    std::vector<ConstructionStep> steps;
};

struct RealizeOptions {
    int max_generators = 128;
};

/// Theorem-1 engine for squarefree psi with unit-circle roots and psi(1)=1.
RealizationCertificate realize_irreducible_squarefree(const IntPoly& psi,
                                                      const RealizeOptions& opt = {});

/// Theorem-1 route: factors the target into squarefree layers by
/// multiplicity slicing and folds the layer realizations.
RealizationCertificate realize_irreducible(const IntPoly& p, const RealizeOptions& opt = {});

/// Single two-component layer: squarefree psi with unit-circle roots and
/// (t-1) | psi.
RealizationCertificate realize_reducible_layer(const IntPoly& psi,
                                               const RealizeOptions& opt = {});

/// Theorem-2 route: (t-1)-layers with round-robin prime-power assignment
/// plus an irreducible residual.
RealizationCertificate realize_theorem2(const IntPoly& p, const RealizeOptions& opt = {});

/// Theorem-3 family (-1)^(n+k) (t-1)^n (t+1)^k; refuses n < k.
RealizationCertificate realize_pm(int n, int k, const RealizeOptions& opt = {});

enum class RealizeMode { Auto, Thm1, Thm2, Thm3 };

RealizationCertificate realize_target(const IntPoly& p, RealizeMode mode,
                                      const RealizeOptions& opt = {});

/// Product certificate of two factors, including the centrality closure
/// induced by the factors' central words.
RealizationCertificate fold_product(const RealizationCertificate& a,
                                    const RealizationCertificate& b,
                                    const RealizeOptions& opt = {});

}  // namespace calex

#endif
