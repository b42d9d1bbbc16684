#ifndef CALEX_CHECKS_HPP
#define CALEX_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "calex/poly.hpp"

namespace calex {

enum class Verdict { Pass, Fail, NotApplicable };

struct PropertyCheck {
    std::string id;
    Verdict verdict = Verdict::NotApplicable;
    std::string witness;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_passed_or_na() const;
    const PropertyCheck& operator[](const std::string& id) const;
};

/// Checks the divisor-of-(t-1)(t^d-1)^(d-2) property list for an Alexander
/// polynomial of a degree-d curve group with n components. Semisimplicity
/// (iv) is judged from the invariant factors when supplied, otherwise
/// reported not-applicable. Throws NotRootsOfUnity when the factorization
/// needed for (iii)/(v) does not exist.
PropertyReport grku_properties(const IntPoly& delta, int degree_d, int components_n,
                               std::optional<bool> factors_squarefree = std::nullopt);

enum class RealizabilityVerdict {
    RealizableThm1,
    RealizableThm2,
    RealizableThm3,
    NotRealizablePM,
    NotRootsOfUnityNecessary,
    UnknownConjecture,
};

std::string to_string(RealizabilityVerdict v);

struct Realizability {
    RealizabilityVerdict verdict;
    std::string detail;
    bool condition_ii_violated = false;
    std::optional<std::pair<int, int>> pm_nk;  // for the +-(t-1)^n (t+1)^k family
};

/// Strongest applicable verdict with witnessing data; never claims more
/// than the theorems prove.
Realizability classify_realizability(const IntPoly& p);

/// Number of roots of delta (with multiplicity) that are n-th roots of
/// unity different from 1.
unsigned long betti_statistic(const IntPoly& delta, unsigned long n);

}  // namespace calex

#endif
