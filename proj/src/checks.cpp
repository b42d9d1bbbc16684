#include "calex/checks.hpp"

#include <algorithm>

#include "calex/errors.hpp"
#include "calex/realize.hpp"
#include "calex/textio.hpp"

namespace calex {

bool PropertyReport::all_passed_or_na() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.verdict != Verdict::Fail; });
}

const PropertyCheck& PropertyReport::operator[](const std::string& id) const {
    for (const PropertyCheck& c : checks)
        if (c.id == id) return c;
    throw Error("BadArgument", "no property check with id " + id, EXIT_INTERNAL);
}

namespace {

unsigned multiplicity_of_root_one(const IntPoly& delta) {
    unsigned mult = 0;
    IntPoly cur = delta;
    IntPoly t_minus_1 = IntPoly::t() - IntPoly::one();
    for (;;) {
        auto q = cur.divided_exactly_by(t_minus_1);
        if (!q) return mult;
        cur = *q;
        ++mult;
    }
}

}  // namespace

PropertyReport grku_properties(const IntPoly& delta, int degree_d, int components_n,
                               std::optional<bool> factors_squarefree) {
    if (delta.is_zero())
        throw PreconditionFailed("the property suite needs a nonzero Alexander polynomial");
    PropertyReport rep;

    rep.checks.push_back({"i", Verdict::Pass, "integer coefficients by construction"});

    Int at0 = delta.coeff(0);
    rep.checks.push_back({"ii", (at0 == 1 || at0 == -1) ? Verdict::Pass : Verdict::Fail,
                          "delta(0) = " + at0.get_str()});

    CyclotomicFactorization fact = factor_cyclotomic(delta);  // (iii)/(v) need it
    {
        bool ok = fact.t_power == 0;
        std::string bad;
        for (const auto& [idx, mult] : fact.factors) {
            (void)mult;
            if (static_cast<unsigned long>(degree_d) % idx != 0) {
                ok = false;
                bad = "Phi_" + std::to_string(idx) + " has roots that are not " +
                      std::to_string(degree_d) + "-th roots of unity";
                break;
            }
        }
        rep.checks.push_back({"iii", ok ? Verdict::Pass : Verdict::Fail,
                              ok ? "all roots divide t^" + std::to_string(degree_d) + " - 1"
                                 : bad});
    }

    if (factors_squarefree)
        rep.checks.push_back({"iv", *factors_squarefree ? Verdict::Pass : Verdict::Fail,
                              *factors_squarefree ? "all invariant factors squarefree"
                                                  : "a repeated invariant-factor root exists"});
    else
        rep.checks.push_back(
            {"iv", Verdict::NotApplicable, "invariant factors not supplied"});

    {
        PropertyCheck v{"v", Verdict::NotApplicable, ""};
        if (delta.degree() == 0) {
            v.verdict = Verdict::Pass;
            v.witness = "constant delta divides everything";
        } else if (degree_d < 2) {
            v.witness = "curve degree below 2";
        } else {
            IntPoly bound = (IntPoly::t() - IntPoly::one());
            std::vector<Int> tn(static_cast<size_t>(degree_d) + 1, Int(0));
            tn[0] = -1;
            tn[static_cast<size_t>(degree_d)] = 1;
            bound = bound * IntPoly(std::move(tn)).pow(static_cast<unsigned>(degree_d - 2));
            auto q = bound.divided_exactly_by(delta);
            v.verdict = q ? Verdict::Pass : Verdict::Fail;
            v.witness = q ? "quotient = " + poly_to_string(*q)
                          : "delta does not divide (t-1)(t^d-1)^(d-2)";
        }
        rep.checks.push_back(v);
    }

    {
        unsigned mult1 = multiplicity_of_root_one(delta);
        bool ok = mult1 == static_cast<unsigned>(components_n - 1);
        rep.checks.push_back({"vi", ok ? Verdict::Pass : Verdict::Fail,
                              "multiplicity of t = 1 is " + std::to_string(mult1) +
                                  ", components - 1 = " + std::to_string(components_n - 1)});
    }

    if (components_n == 1) {
        Int d1 = eval_at_one(delta);
        bool ok = d1 == 1 && delta.degree() % 2 == 0;
        rep.checks.push_back({"vii", ok ? Verdict::Pass : Verdict::Fail,
                              "delta(1) = " + d1.get_str() + ", degree " +
                                  std::to_string(delta.degree())});
    } else {
        rep.checks.push_back({"vii", Verdict::NotApplicable, "more than one component"});
    }
    return rep;
}

std::string to_string(RealizabilityVerdict v) {
    switch (v) {
        case RealizabilityVerdict::RealizableThm1: return "realizable-thm1";
        case RealizabilityVerdict::RealizableThm2: return "realizable-thm2";
        case RealizabilityVerdict::RealizableThm3: return "realizable-thm3";
        case RealizabilityVerdict::NotRealizablePM: return "not-realizable-pm";
        case RealizabilityVerdict::NotRootsOfUnityNecessary: return "not-roots-of-unity";
        case RealizabilityVerdict::UnknownConjecture: return "unknown-conjecture";
    }
    return "?";
}

Realizability classify_realizability(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionFailed("cannot classify the zero polynomial");

    IntPoly monic;
    CyclotomicFactorization fact;
    try {
        CanonicalTarget ct = det_convention_normalize(p);
        monic = ct.poly.leading() == 1 ? ct.poly : -ct.poly;
        fact = factor_cyclotomic(monic);
    } catch (const NotRootsOfUnity& e) {
        return {RealizabilityVerdict::NotRootsOfUnityNecessary,
                std::string("a root off the unit circle rules the target out: ") + e.what(),
                false, std::nullopt};
    }

    if (eval_at_one(monic) == 1)
        return {RealizabilityVerdict::RealizableThm1,
                "all roots are roots of unity and P(1) = 1", false, std::nullopt};

    bool pm_form = true;
    for (const auto& [idx, mult] : fact.factors) {
        (void)mult;
        if (idx > 2) pm_form = false;
    }
    if (pm_form) {
        int n = static_cast<int>(fact.multiplicity(1));
        int k = static_cast<int>(fact.multiplicity(2));
        if (n >= k)
            return {RealizabilityVerdict::RealizableThm3,
                    "+-(t-1)^" + std::to_string(n) + " (t+1)^" + std::to_string(k) +
                        " with n >= k",
                    false, std::make_pair(n, k)};
        return {RealizabilityVerdict::NotRealizablePM,
                "+-(t-1)^n (t+1)^k is realizable iff n >= k; here n = " + std::to_string(n) +
                    " < k = " + std::to_string(k),
                true, std::make_pair(n, k)};
    }

    unsigned mult1 = fact.multiplicity(1);
    for (const auto& [q, mult] : fact.factors) {
        if (q == 1 || !prime_power_base(q)) continue;
        if (mult > mult1)
            return {RealizabilityVerdict::UnknownConjecture,
                    "condition (ii) fails: multiplicity " + std::to_string(mult) + " of Phi_" +
                        std::to_string(q) + " exceeds multiplicity " + std::to_string(mult1) +
                        " of the root 1; no theorem decides this target",
                    true, std::nullopt};
    }
    return {RealizabilityVerdict::RealizableThm2,
            "prime-power root multiplicities are bounded by the multiplicity of 1", false,
            std::nullopt};
}

unsigned long betti_statistic(const IntPoly& delta, unsigned long n) {
    if (delta.is_zero())
        throw PreconditionFailed("the statistic needs a nonzero Alexander polynomial");
    if (n == 0) throw PreconditionFailed("the cover index must be positive");
    CyclotomicFactorization fact = factor_cyclotomic(delta);
    unsigned long count = 0;
    for (unsigned long m : divisors(n)) {
        if (m == 1) continue;
        count += fact.multiplicity(m) * totient(m);
    }
    return count;
}

}  // namespace calex
