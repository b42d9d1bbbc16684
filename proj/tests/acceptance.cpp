// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "calex/alexmod.hpp"
#include "calex/checks.hpp"
#include "calex/commands.hpp"
#include "calex/errors.hpp"
#include "calex/involution.hpp"
#include "calex/realize.hpp"
#include "calex/textio.hpp"

using namespace calex;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        pass = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

IntPoly tm1() { return IntPoly::t() - IntPoly::one(); }
IntPoly tp1() { return IntPoly::t() + IntPoly::one(); }

IntPoly delta_of(const CPresentation& g) {
    AlexanderResult r = alexander_polynomial(g);
    if (r.zero) throw VerificationFailed("unexpected zero Alexander polynomial");
    return r.delta;
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
    Outcome out;
    struct Golden {
        std::string name;
        CPresentation pres;
        IntPoly want;
        bool zero;
    };
    std::vector<Golden> table = {
        {"example_4_1", builtin_example_4_1(), IntPoly({1, -2, 1}), false},
        {"example_4_2", builtin_example_4_2(), IntPoly({1, 1, -1, -1}), false},
        {"g2", builtin_g2(), IntPoly({-1, 0, 1}), false},
    };
    for (int n = 1; n <= 5; ++n) {
        IntPoly want = tm1().pow(static_cast<unsigned>(n - 1));
        if ((n - 1) % 2) want = -want;
        table.push_back({"abelian(" + std::to_string(n) + ")", builtin_abelian(n), want, false});
    }
    table.push_back({"free(2)", builtin_free(2), IntPoly::zero(), true});
    table.push_back({"free(3)", builtin_free(3), IntPoly::zero(), true});

    for (const Golden& g : table) {
        auto t0 = std::chrono::steady_clock::now();
        AlexanderResult r = alexander_polynomial(g.pres);
        double ms = ms_since(t0);
        if (ms >= 1000.0) out.fail(g.name + " took " + std::to_string(ms) + " ms");
        if (g.zero) {
            if (!r.zero) out.fail(g.name + " is not identically zero");
        } else if (r.zero || r.delta != g.want) {
            out.fail(g.name + " delta mismatch: got " +
                     (r.zero ? std::string("0") : poly_to_string(r.delta)));
        }
    }
    if (out.pass) out.note = "10 golden values, exact";
    return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
    Outcome out;
    auto d1 = derive_shift_action(builtin_example_4_1());
    if (!d1 || d1->action != IntMatrix(2, 2, {Int(0), Int(-1), Int(1), Int(2)}))
        out.fail("example_4_1 shift action mismatch");
    else if (charpoly(d1->action) != IntPoly({1, -2, 1}))
        out.fail("example_4_1 charpoly mismatch");

    auto d2 = derive_shift_action(builtin_example_4_2());
    if (!d2 || d2->action != IntMatrix(3, 3, {Int(0), Int(0), Int(1), Int(1), Int(0), Int(1),
                                              Int(0), Int(1), Int(-1)}))
        out.fail("example_4_2 shift action mismatch");
    else if (charpoly(d2->action) != IntPoly({1, 1, -1, -1}))
        out.fail("example_4_2 charpoly mismatch");
    if (out.pass) out.note = "both matrices and charpolys exact on bases a(l,3)";
    return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion3() {
    Outcome out;
    std::vector<std::pair<std::string, IntPoly>> targets = {
        {"1", IntPoly::one()},
        {"t^2-t+1", IntPoly({1, -1, 1})},
        {"(t^2-t+1)^2", IntPoly({1, -1, 1}) * IntPoly({1, -1, 1})},
        {"t^2-1", IntPoly({-1, 0, 1})},
        {"(t-1)(t+1)(t^2-t+1)", tm1() * tp1() * IntPoly({1, -1, 1})},
        {"(t-1)^2(t+1)^2", tm1().pow(2) * tp1().pow(2)},
    };
    for (const auto& [name, target] : targets) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            RealizationCertificate cert = realize_target(target, RealizeMode::Auto);
            AlexanderResult again = alexander_polynomial(cert.presentation);
            if (again.zero || again.delta != cert.target)
                out.fail(name + " roundtrip mismatch");
        } catch (const Error& e) {
            out.fail(name + ": " + e.what());
        }
        double ms = ms_since(t0);
        if (ms >= 60000.0) out.fail(name + " took " + std::to_string(ms) + " ms");
    }
    for (auto [n, k] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        auto t0 = std::chrono::steady_clock::now();
        std::string name = "pm(" + std::to_string(n) + "," + std::to_string(k) + ")";
        try {
            RealizationCertificate cert = realize_pm(n, k);
            IntPoly want = tm1().pow(static_cast<unsigned>(n)) * tp1().pow(static_cast<unsigned>(k));
            if ((n + k) % 2) want = -want;
            if (delta_of(cert.presentation) != want) out.fail(name + " roundtrip mismatch");
        } catch (const Error& e) {
            out.fail(name + ": " + e.what());
        }
        if (ms_since(t0) >= 60000.0) out.fail(name + " too slow");
    }
    for (auto [n, k] : {std::pair{1, 2}, {0, 1}}) {
        try {
            realize_pm(n, k);
            out.fail("pm(" + std::to_string(n) + "," + std::to_string(k) + ") did not refuse");
        } catch (const NotRealizable&) {
        }
    }
    if (out.pass) out.note = "6 targets + 4 grid points verified, 2 refusals";
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion4() {
    Outcome out;
    // corpus: syntactic members as certificates, plus realized groups
    std::vector<RealizationCertificate> corpus;
    corpus.push_back(realize_pm(0, 0));                                     // Z
    corpus.push_back(realize_pm(1, 0));                                     // Z^2
    corpus.push_back(realize_pm(2, 0));                                     // Z^3
    corpus.push_back(realize_target(IntPoly({1, -1, 1}), RealizeMode::Auto));   // Phi_6
    corpus.push_back(realize_target(IntPoly({-1, 0, 1}), RealizeMode::Thm2));   // (t-1)(t+1)
    corpus.push_back(realize_target(-(tm1() * cyclotomic(4)), RealizeMode::Thm2));
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3},
                                              {3, 3}, {3, 5}, {4, 5}, {2, 5}, {0, 4}};
    int done = 0;
    for (auto [i, j] : pairs) {
        const RealizationCertificate& a = corpus[static_cast<size_t>(i)];
        const RealizationCertificate& b = corpus[static_cast<size_t>(j)];
        try {
            RealizationCertificate prod = fold_product(a, b);
            if (delta_of(prod.presentation) != a.computed_delta * b.computed_delta) {
                out.fail("pair " + std::to_string(i) + "," + std::to_string(j) + " mismatch");
                continue;
            }
            ++done;
        } catch (const Error& e) {
            out.fail(std::string("pair failed: ") + e.what());
        }
    }
    if (out.pass) out.note = std::to_string(done) + " products multiplied exactly";
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome criterion5() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> small(0, 4);
    int done = 0;
    while (done < 100) {
        int n1 = small(rng), n2 = small(rng), n3 = small(rng);
        int n = n1 + n2 + 2 * n3;
        if (n == 0 || n > 10) continue;
        ++done;
        IntMatrix w = random_unimodular(n, 3, rng);
        IntMatrix h = w * canonical_involution(n1, n2, n3) * inverse_unimodular(w);
        InvolutionDecomposition d = decompose(h);
        if (d.n1 != n1 || d.n2 != n2 || d.n3 != n3) {
            out.fail("counts mismatch at sample " + std::to_string(done));
            break;
        }
        if (!(inverse_unimodular(d.basis) * h * d.basis == d.canonical_block())) {
            out.fail("conjugation witness failed at sample " + std::to_string(done));
            break;
        }
    }
    double ms = ms_since(t0);
    if (ms >= 10000.0) out.fail("total time " + std::to_string(ms) + " ms exceeds 10 s");
    if (out.pass)
        out.note = "100 seeded conjugates in " + std::to_string(static_cast<int>(ms)) + " ms";
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6() {
    Outcome out;
    struct Member {
        std::string name;
        CPresentation pres;
        int degree;  // 0: fall back to the witness degree
    };
    std::vector<Member> corpus = {{"g2", builtin_g2(), 0}};
    for (int n = 1; n <= 5; ++n)
        corpus.push_back({"abelian(" + std::to_string(n) + ")", builtin_abelian(n), n});
    {
        // realized members use their recorded construction degree
        RealizationCertificate c = realize_target(IntPoly({1, -1, 1}), RealizeMode::Auto);
        corpus.push_back({"realized phi6", c.presentation, static_cast<int>(c.expanded_degree)});
        c = realize_target(IntPoly({-1, 0, 1}), RealizeMode::Thm2);
        corpus.push_back({"realized t^2-1", c.presentation, static_cast<int>(c.expanded_degree)});
        c = realize_target(-(tm1() * cyclotomic(4)), RealizeMode::Thm2);
        corpus.push_back(
            {"realized (t-1)(t^2+1)", c.presentation, static_cast<int>(c.expanded_degree)});
    }

    for (const Member& m : corpus) {
        AlexanderResult r = alexander_polynomial(m.pres);
        if (r.zero) {
            out.fail(m.name + " unexpectedly zero");
            continue;
        }
        int d = m.degree > 0 ? m.degree : witness_degree(r.delta);
        PropertyReport rep = grku_properties(r.delta, d, r.components, r.factors_squarefree);
        if (!rep.all_passed_or_na()) out.fail(m.name + " fails an applicable property");
    }

    // differential outcomes on the general-position examples
    AlexanderResult e1 = alexander_polynomial(builtin_example_4_1());
    PropertyReport rep1 =
        grku_properties(e1.delta, witness_degree(e1.delta), e1.components, e1.factors_squarefree);
    if (rep1["vi"].verdict != Verdict::Fail)
        out.fail("example_4_1 multiplicity violation not flagged");

    AlexanderResult e2 = alexander_polynomial(builtin_example_4_2());
    Realizability c2 = classify_realizability(e2.delta);
    if (c2.verdict != RealizabilityVerdict::NotRealizablePM)
        out.fail("example_4_2 delta not flagged as forbidden for Hurwitz C-groups");

    if (out.pass) out.note = "9 members pass; both differential outcomes flagged";
    return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
    Outcome out;
    struct Member {
        std::string name;
        CPresentation pres;
        int k;
    };
    std::vector<Member> corpus = {{"g2", builtin_g2(), 2}};
    for (int n = 1; n <= 5; ++n)
        corpus.push_back({"abelian(" + std::to_string(n) + ")", builtin_abelian(n), 1});
    {
        RealizationCertificate c = realize_target(IntPoly({1, -1, 1}), RealizeMode::Auto);
        corpus.push_back({"realized phi6", c.presentation, 6});
        c = realize_target(IntPoly({-1, 0, 1}), RealizeMode::Thm2);
        corpus.push_back({"realized t^2-1", c.presentation, 2});
        c = realize_target(-(tm1() * cyclotomic(4)), RealizeMode::Thm2);
        corpus.push_back({"realized (t-1)(t^2+1)", c.presentation, 4});
    }
    for (const Member& m : corpus) {
        try {
            IntegralModule im = integral_module(m.pres, m.k);
            IntPoly cp = charpoly(im.free_action);
            AlexanderResult r = alexander_polynomial(m.pres);
            if (r.zero || cp != r.delta)
                out.fail(m.name + ": integral charpoly " + poly_to_string(cp) +
                         " != rational delta");
        } catch (const Error& e) {
            out.fail(m.name + ": " + e.what());
        }
    }

    std::vector<CPresentation> shift_corpus = {builtin_g2(),          builtin_example_4_1(),
                                               builtin_example_4_2(), builtin_abelian(4),
                                               builtin_free(2),       corpus.back().pres};
    for (const CPresentation& g : shift_corpus)
        if (!shift_equivariance_check(g, 4)) out.fail("shift equivariance violated");

    if (out.pass) out.note = "integral/rational agreement on 9 members; equivariance s = 4";
    return out;
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion8() {
    Outcome out;
    for (unsigned long n = 1; n <= 200; ++n) {
        if (!cyclotomic(n).is_monic()) {
            out.fail("Phi_n not monic at n = " + std::to_string(n));
            break;
        }
        IntPoly prod = IntPoly::one();
        for (unsigned long d : divisors(n)) prod = prod * cyclotomic(d);
        IntPoly expect = IntPoly::monomial(1, static_cast<int>(n)) - IntPoly::one();
        if (prod != expect) {
            out.fail("product of Phi_d != t^n - 1 at n = " + std::to_string(n));
            break;
        }
    }
    for (unsigned long k = 2; k <= 200; ++k) {
        Int v = eval_at_one(cyclotomic(k));
        auto p = prime_power_base(k);
        if ((p && v != Int(*p)) || (!p && v != 1)) {
            out.fail("Phi_k(1) law fails at k = " + std::to_string(k));
            break;
        }
    }
    // the combinatorial count on the criterion-1 polynomials
    if (betti_statistic(IntPoly({-1, 0, 1}), 2) != 1) out.fail("count for t^2-1, n=2");
    if (betti_statistic(IntPoly({1, -2, 1}), 4) != 0) out.fail("count for (t-1)^2");
    if (betti_statistic(IntPoly({1, 1, -1, -1}), 2) != 2) out.fail("count for (1-t)(t+1)^2");
    if (out.pass) out.note = "n up to 200, exact";
    return out;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<Outcome()> run;
    };
    std::vector<Entry> criteria = {
        {1, "golden Alexander polynomials", criterion1},
        {2, "intermediate shift-action matrices", criterion2},
        {3, "realization roundtrips and refusals", criterion3},
        {4, "multiplicativity under products", criterion4},
        {5, "involution decomposition roundtrip", criterion5},
        {6, "property suite and differential outcomes", criterion6},
        {7, "integral/rational cross-validation", criterion7},
        {8, "cyclotomic laws", criterion8},
    };
    bool all = true;
    for (const Entry& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note = std::string("exception: ") + e.what();
        }
        double ms = ms_since(t0);
        std::printf("CRITERION %d: %s — %s (%.0f ms)%s%s\n", c.id,
                    out.pass ? "PASS" : "FAIL", c.label, ms, out.note.empty() ? "" : " — ",
                    out.note.c_str());
        all = all && out.pass;
    }
    std::printf("ACCEPTANCE: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
