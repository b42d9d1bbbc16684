#ifndef CALEX_ALEXMOD_HPP
#define CALEX_ALEXMOD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "calex/cgroup.hpp"
#include "calex/linalg.hpp"
#include "calex/poly.hpp"

namespace calex {

/// Presentation of N/N' as a module over Z[t, t^-1] on one generator b_j per
/// group generator j = 2..m (the distinguished generator x_1 rewrites to 0).
/// Row i is the rewritten relator of relation i at shift 0; the shift-k
/// instance is t^k times the stored row.
struct AlexanderModule {
    int num_module_generators = 0;
    std::vector<std::vector<LaurentPoly>> rows;
};

AlexanderModule rs_rewrite(const CPresentation& g);

/// Rewrites an arbitrary relator word (exponent sum zero not required; the
/// word is scanned as-is starting from state `start`).
std::vector<LaurentPoly> rewrite_word(const Word& w, int num_module_generators, int start = 0);

struct AlexanderResult {
    bool zero = false;                       // the identically-zero case
    IntPoly delta;                           // det(h - t Id) convention
    std::vector<RatPoly> invariant_factors;  // monic, t-powers stripped, nonconstant
    bool factors_squarefree = true;          // semisimplicity of the produced factors
    int components = 0;
};

AlexanderResult alexander_polynomial(const CPresentation& g);

/// Integral form of N/N' when multiplication by t^k is the identity on it.
/// The precondition is established exactly: (t^k - 1) b_j must lie in the
/// row span over Z[t, t^-1] for every module generator (witness found by a
/// windowed lattice search); otherwise NoCentralPower is thrown.
struct IntegralModule {
    FgAbelianGroup group;   // on generators a(l,j), l = 0..k-1, lexicographic (l, j)
    IntMatrix shift;        // generator-level action a(l,j) -> a(l+1 mod k, j)
    IntMatrix free_action;  // induced matrix on the free part
    int k = 1;
};

IntegralModule integral_module(const CPresentation& g, int central_power);

/// Rewrites x_1^s r x_1^-s directly for s = 1..max_shift and checks each
/// equals t^s times the stored row.
bool shift_equivariance_check(const CPresentation& g, int max_shift);

/// Outcome of eliminating module generators along unit (+-t^e) coefficients:
/// when the module reduces to a single generator with one defining relation
/// f having unit leading and trailing coefficients, N/N' is free over Z on
/// a(0,j*), ..., a(D-1,j*) and the shift acts by the companion matrix of f.
struct DerivedShiftAction {
    IntMatrix action;
    std::vector<std::pair<int, int>> basis;  // (l, j) labels, meaning a(l,j)
    IntPoly relation;                        // the monic f
};

std::optional<DerivedShiftAction> derive_shift_action(const CPresentation& g);

}  // namespace calex

#endif
