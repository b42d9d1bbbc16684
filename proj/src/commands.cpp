#include "calex/commands.hpp"

#include <functional>
#include <random>

#include "calex/alexmod.hpp"
#include "calex/errors.hpp"
#include "calex/textio.hpp"

namespace calex {

int witness_degree(const IntPoly& delta) {
    if (delta.is_zero())
        throw PreconditionFailed("no witness degree for the zero polynomial");
    if (delta.degree() == 0) return 1;
    unsigned long r = root_order(delta);
    unsigned mm = 1;
    for (const auto& [n, mult] : factor_cyclotomic(delta).factors) {
        (void)n;
        mm = std::max(mm, mult);
    }
    Int d = Int(r) * (mm + 2);
    if (!d.fits_sint_p())
        throw PreconditionFailed("witness degree exceeds machine range");
    return static_cast<int>(d.get_si());
}

namespace {

void add_property_report(ReportNode& parent, const PropertyReport& rep) {
    ReportNode& sec = parent.add_section("properties");
    for (const PropertyCheck& c : rep.checks) {
        std::string v = c.verdict == Verdict::Pass           ? "pass"
                        : c.verdict == Verdict::Fail         ? "fail"
                                                             : "not-applicable";
        sec.add(c.id, v + " (" + c.witness + ")");
    }
    sec.add("all", rep.all_passed_or_na() ? "pass" : "violations-present");
}

void add_certificate(ReportNode& parent, const RealizationCertificate& cert) {
    ReportNode& sec = parent.add_section("certificate");
    sec.add("target", poly_to_string(cert.target));
    if (!cert.normalization.empty()) sec.add("input-normalization", cert.normalization);
    sec.add("computed-delta", poly_to_string(cert.computed_delta));
    sec.add("verified", cert.computed_delta == cert.target ? "exact-match" : "MISMATCH");
    sec.add("components", std::to_string(cert.components));
    if (is_hurwitz_presentation(cert.presentation))
        sec.add("hurwitz", "syntactic, degree " +
                               std::to_string(cert.presentation.num_generators()));
    else
        sec.add("hurwitz", "by construction; central word of length " +
                               std::to_string(cert.expanded_degree) + " recorded");
    sec.add("central-word", word_to_string(cert.central_word));
    ReportNode& steps = sec.add_section("construction");
    for (const ConstructionStep& st : cert.steps) {
        ReportNode& s = steps.add_section("step");
        s.add("kind", st.kind);
        s.add("target", poly_to_string(st.target));
        if (st.k) s.add("k", std::to_string(st.k));
        if (st.kind == "thm1-layer" || st.kind == "reducible-layer")
            s.add("d", std::to_string(st.d));
        if (!st.conjugator_poly.is_zero() && st.kind == "thm1-layer")
            s.add("conjugator-poly", poly_to_string(st.conjugator_poly));
        if (!st.conjugator_word.empty()) s.add("conjugator-word", st.conjugator_word);
        if (!st.kernel_words.empty()) {
            ReportNode& kw = s.add_section("kernel-words");
            for (const std::string& w : st.kernel_words) kw.add("word", w);
        }
        s.add("generators", std::to_string(st.generators));
    }
    sec.add_lines("presentation", presentation_to_string(cert.presentation));
}

}  // namespace

ReportNode cmd_compute(const CPresentation& g, const std::string& input_desc,
                       const ComputeOptions& opt) {
    ReportNode root("calex-report");
    root.add("command", "compute");
    root.add("input", input_desc);
    root.add_lines("presentation", presentation_to_string(g));

    AlexanderResult res = alexander_polynomial(g);
    root.add("components", std::to_string(irreducible_components(g)));
    root.add("hurwitz-syntactic", is_hurwitz_presentation(g) ? "yes" : "no");
    if (res.zero) {
        root.add("delta", "0 (identically zero: infinite-dimensional module)");
        return root;
    }
    root.add("delta", poly_to_string(res.delta));
    ReportNode& inv = root.add_section("invariant-factors");
    for (const RatPoly& f : res.invariant_factors) inv.add("factor", ratpoly_to_string(f));
    inv.add("squarefree", res.factors_squarefree ? "yes" : "no");

    if (auto derived = derive_shift_action(g)) {
        ReportNode& sec = root.add_section("integral-shift-action");
        sec.add("matrix", matrix_to_string(derived->action));
        std::string basis;
        for (const auto& [l, j] : derived->basis) {
            if (!basis.empty()) basis += ", ";
            basis += "a(" + std::to_string(l) + "," + std::to_string(j) + ")";
        }
        sec.add("basis", basis.empty() ? "(trivial module)" : basis);
        sec.add("relation", poly_to_string(derived->relation));
        sec.add("charpoly", poly_to_string(charpoly(derived->action)));
    }

    if (opt.central_power) {
        IntegralModule im = integral_module(g, *opt.central_power);
        ReportNode& sec = root.add_section("integral-module");
        sec.add("central-power", std::to_string(im.k));
        sec.add("free-rank", std::to_string(im.group.free_rank()));
        std::string tor;
        for (const Int& d : im.group.torsion()) {
            if (!tor.empty()) tor += ", ";
            tor += d.get_str();
        }
        sec.add("torsion", tor.empty() ? "(none)" : tor);
        sec.add("free-action", matrix_to_string(im.free_action));
        sec.add("free-action-charpoly", poly_to_string(charpoly(im.free_action)));
    }

    try {
        int d = opt.property_degree ? *opt.property_degree : witness_degree(res.delta);
        root.add("property-degree", std::to_string(d));
        add_property_report(root, grku_properties(res.delta, d, res.components,
                                                  res.factors_squarefree));
    } catch (const NotRootsOfUnity& e) {
        root.add("properties", std::string("not-applicable: ") + e.what());
    }
    return root;
}

ReportNode cmd_realize(const IntPoly& target, const std::string& target_text, RealizeMode mode,
                       const RealizeOptions& opt) {
    ReportNode root("calex-report");
    root.add("command", "realize");
    root.add("target-input", target_text);
    std::string mode_name = mode == RealizeMode::Auto   ? "auto"
                            : mode == RealizeMode::Thm1 ? "thm1"
                            : mode == RealizeMode::Thm2 ? "thm2"
                                                        : "thm3";
    root.add("mode", mode_name);
    RealizationCertificate cert = realize_target(target, mode, opt);
    add_certificate(root, cert);
    return root;
}

ReportNode cmd_decompose(const IntMatrix& m) {
    ReportNode root("calex-report");
    root.add("command", "decompose");
    root.add("matrix", matrix_to_string(m));
    InvolutionDecomposition dec = decompose(m);
    root.add("n1", std::to_string(dec.n1));
    root.add("n2", std::to_string(dec.n2));
    root.add("n3", std::to_string(dec.n3));
    root.add("basis", matrix_to_string(dec.basis));
    root.add("conjugation-check",
             (inverse_unimodular(dec.basis) * m * dec.basis == dec.canonical_block())
                 ? "verified"
                 : "MISMATCH");
    SemidirectStats st = semidirect_stats(dec.n1, dec.n2, dec.n3);
    ReportNode& sec = root.add_section("semidirect-stats");
    sec.add("abelianization",
            "Z^" + std::to_string(st.free_rank) +
                (st.torsion.empty() ? "" : " + (Z/2)^" + std::to_string(st.torsion.size())));
    sec.add("charpoly-tid-minus-h", poly_to_string(st.charpoly));
    return root;
}

ReportNode cmd_check(const IntPoly& p, const std::string& target_text,
                     std::optional<int> components, std::optional<int> degree,
                     std::optional<unsigned long> betti_n) {
    ReportNode root("calex-report");
    root.add("command", "check");
    root.add("target-input", target_text);
    Realizability r = classify_realizability(p);
    root.add("classification", to_string(r.verdict));
    root.add("detail", r.detail);
    if (r.condition_ii_violated) root.add("condition-ii", "violated");
    if (r.pm_nk)
        root.add("pm-form", "n = " + std::to_string(r.pm_nk->first) +
                                ", k = " + std::to_string(r.pm_nk->second));

    if (components) {
        int d = degree ? *degree : witness_degree(p);
        root.add("property-degree", std::to_string(d));
        try {
            add_property_report(root, grku_properties(p, d, *components));
        } catch (const NotRootsOfUnity& e) {
            root.add("properties", std::string("not-applicable: ") + e.what());
        }
    }
    if (betti_n) {
        try {
            root.add("betti-r-" + std::to_string(*betti_n),
                     std::to_string(betti_statistic(p, *betti_n)));
        } catch (const NotRootsOfUnity& e) {
            root.add("betti", std::string("not-applicable: ") + e.what());
        }
    }
    return root;
}

// ------------------------------------------------------------------- demo

namespace {

struct DemoTally {
    ReportNode* items;
    bool all = true;

    void check(const std::string& name, const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const Error& e) {
            detail = std::string(e.kind()) + ": " + e.what();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        items->add(name, std::string(ok ? "PASS" : "FAIL") + (detail.empty() ? "" : " (" + detail + ")"));
        if (!ok) all = false;
    }
};

IntPoly pm_poly(int n, int k) {
    IntPoly p = (IntPoly::t() - IntPoly::one()).pow(static_cast<unsigned>(n)) *
                (IntPoly::t() + IntPoly::one()).pow(static_cast<unsigned>(k));
    return (n + k) % 2 ? -p : p;
}

}  // namespace

ReportNode cmd_demo(unsigned long seed) {
    ReportNode root("calex-report");
    root.add("command", "demo");
    root.add("seed", std::to_string(seed));
    ReportNode& items = root.add_section("items");
    DemoTally tally{&items};

    auto delta_is = [](const CPresentation& g, const IntPoly& want, std::string& detail) {
        AlexanderResult r = alexander_polynomial(g);
        detail = r.zero ? "delta = 0" : "delta = " + poly_to_string(r.delta);
        return !r.zero && r.delta == want;
    };

    tally.check("delta example_4_1 = (t-1)^2", [&](std::string& d) {
        return delta_is(builtin_example_4_1(), IntPoly({1, -2, 1}), d);
    });
    tally.check("delta example_4_2 = (1-t)(t+1)^2", [&](std::string& d) {
        return delta_is(builtin_example_4_2(), IntPoly({1, 1, -1, -1}), d);
    });
    tally.check("delta g2 = t^2 - 1", [&](std::string& d) {
        return delta_is(builtin_g2(), IntPoly({-1, 0, 1}), d);
    });
    for (int n = 1; n <= 5; ++n) {
        tally.check("delta abelian(" + std::to_string(n) + ")", [&](std::string& d) {
            IntPoly want = (IntPoly::t() - IntPoly::one()).pow(static_cast<unsigned>(n - 1));
            if ((n - 1) % 2) want = -want;
            return delta_is(builtin_abelian(n), want, d);
        });
    }
    for (int m = 2; m <= 3; ++m) {
        tally.check("delta free(" + std::to_string(m) + ") = 0", [&](std::string& d) {
            AlexanderResult r = alexander_polynomial(builtin_free(m));
            d = r.zero ? "identically zero" : "nonzero";
            return r.zero;
        });
    }

    tally.check("shift action example_4_1", [&](std::string& d) {
        auto der = derive_shift_action(builtin_example_4_1());
        if (!der) return false;
        d = matrix_to_string(der->action);
        return der->action == IntMatrix(2, 2, {Int(0), Int(-1), Int(1), Int(2)});
    });
    tally.check("shift action example_4_2", [&](std::string& d) {
        auto der = derive_shift_action(builtin_example_4_2());
        if (!der) return false;
        d = matrix_to_string(der->action);
        return der->action ==
               IntMatrix(3, 3, {Int(0), Int(0), Int(1), Int(1), Int(0), Int(1), Int(0), Int(1), Int(-1)});
    });

    auto roundtrip = [](const IntPoly& target, RealizeMode mode, std::string& d) {
        RealizationCertificate cert = realize_target(target, mode);
        AlexanderResult again = alexander_polynomial(cert.presentation);
        d = "delta = " + poly_to_string(cert.computed_delta) + ", generators = " +
            std::to_string(cert.presentation.num_generators());
        return !again.zero && again.delta == cert.target;
    };
    tally.check("realize t^2 - t + 1", [&](std::string& d) {
        return roundtrip(IntPoly({1, -1, 1}), RealizeMode::Auto, d);
    });
    tally.check("realize t^2 - 1", [&](std::string& d) {
        return roundtrip(IntPoly({-1, 0, 1}), RealizeMode::Auto, d);
    });
    tally.check("realize (t^2-t+1)^2", [&](std::string& d) {
        return roundtrip(IntPoly({1, -1, 1}) * IntPoly({1, -1, 1}), RealizeMode::Auto, d);
    });
    tally.check("realize (t-1)(t^2+1) via thm2", [&](std::string& d) {
        return roundtrip(-(IntPoly::t() - IntPoly::one()) * IntPoly({1, 0, 1}),
                         RealizeMode::Thm2, d);
    });

    for (auto [n, k] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        tally.check("realize_pm(" + std::to_string(n) + "," + std::to_string(k) + ")",
                    [&, n = n, k = k](std::string& d) {
                        RealizationCertificate cert = realize_pm(n, k);
                        d = "delta = " + poly_to_string(cert.computed_delta);
                        return cert.computed_delta == pm_poly(n, k);
                    });
    }
    for (auto [n, k] : {std::pair{1, 2}, {0, 1}}) {
        tally.check("realize_pm(" + std::to_string(n) + "," + std::to_string(k) + ") refuses",
                    [&, n = n, k = k](std::string& d) {
                        try {
                            realize_pm(n, k);
                        } catch (const NotRealizable& e) {
                            d = e.what();
                            return true;
                        }
                        return false;
                    });
    }

    tally.check("involution roundtrip (10 seeded samples)", [&](std::string& d) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> small(0, 2);
        for (int trial = 0; trial < 10; ++trial) {
            int n1 = small(rng), n2 = small(rng), n3 = small(rng);
            int n = n1 + n2 + 2 * n3;
            if (n == 0) continue;
            IntMatrix w = random_unimodular(n, 3, rng);
            IntMatrix h = w * canonical_involution(n1, n2, n3) * inverse_unimodular(w);
            InvolutionDecomposition dec = decompose(h);
            if (dec.n1 != n1 || dec.n2 != n2 || dec.n3 != n3) {
                d = "counts mismatch at trial " + std::to_string(trial);
                return false;
            }
        }
        return true;
    });

    tally.check("property suite on g2", [&](std::string& d) {
        AlexanderResult r = alexander_polynomial(builtin_g2());
        PropertyReport rep = grku_properties(r.delta, witness_degree(r.delta), r.components,
                                             r.factors_squarefree);
        d = "all applicable checks";
        return rep.all_passed_or_na();
    });
    tally.check("example_4_1 violates the Hurwitz-only multiplicity law", [&](std::string& d) {
        AlexanderResult r = alexander_polynomial(builtin_example_4_1());
        PropertyReport rep = grku_properties(r.delta, witness_degree(r.delta), r.components);
        d = rep["vi"].witness + " (expected differential outcome)";
        return rep["vi"].verdict == Verdict::Fail;
    });
    tally.check("example_4_2 delta is forbidden for Hurwitz C-groups", [&](std::string& d) {
        AlexanderResult r = alexander_polynomial(builtin_example_4_2());
        Realizability c = classify_realizability(r.delta);
        d = c.detail + " (expected differential outcome)";
        return c.verdict == RealizabilityVerdict::NotRealizablePM;
    });

    tally.check("multiplicativity g2 x abelian(3)", [&](std::string& d) {
        CPresentation prod = hurwitz_product(builtin_g2(), builtin_abelian(3));
        AlexanderResult r = alexander_polynomial(prod);
        AlexanderResult r1 = alexander_polynomial(builtin_g2());
        AlexanderResult r2 = alexander_polynomial(builtin_abelian(3));
        d = r.zero ? "zero" : "delta = " + poly_to_string(r.delta);
        return !r.zero && r.delta == r1.delta * r2.delta;
    });

    tally.check("integral cross-check g2 (k = 2)", [&](std::string& d) {
        IntegralModule im = integral_module(builtin_g2(), 2);
        IntPoly cp = charpoly(im.free_action);
        AlexanderResult r = alexander_polynomial(builtin_g2());
        d = "free-part charpoly = " + poly_to_string(cp);
        return !r.zero && cp == r.delta;
    });

    root.add("all", tally.all ? "PASS" : "FAIL");
    return root;
}

}  // namespace calex
