#include "calex/realize.hpp"

#include <algorithm>
#include <map>

#include "calex/checks.hpp"
#include "calex/errors.hpp"
#include "calex/textio.hpp"

namespace calex {

CanonicalTarget det_convention_normalize(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionFailed("the zero polynomial is not a valid target");
    int a = 0;
    while (p.coeff(a) == 0) ++a;
    std::vector<Int> shifted(p.coeffs().begin() + a, p.coeffs().end());
    IntPoly q((std::vector<Int>(shifted)));
    std::string note;
    if (a > 0) note = "stripped unit t^" + std::to_string(a);

    const Int& lc = q.leading();
    if (lc != 1 && lc != -1)
        throw NotRootsOfUnity("leading coefficient " + lc.get_str() +
                              " is not a unit; no product of cyclotomics matches");
    int want = q.degree() % 2 == 0 ? 1 : -1;
    if (lc != want) {
        q = -q;
        if (!note.empty()) note += ", ";
        note += "scaled by -1 to the det(h - t Id) convention";
    }
    return {q, note};
}

namespace {

IntPoly monic_of(const IntPoly& canonical) {
    return canonical.leading() == 1 ? canonical : -canonical;
}

void check_ceiling(int generators, const RealizeOptions& opt) {
    if (generators > opt.max_generators)
        throw PreconditionFailed("construction needs " + std::to_string(generators) +
                                 " generators, above the configured ceiling of " +
                                 std::to_string(opt.max_generators) +
                                 " (raise --max-generators to proceed)");
}

}  // namespace

// ---------------------------------------------------------- SemidirectModel

SemidirectModel::SemidirectModel(IntPoly psi_monic) : psi_(std::move(psi_monic)) {
    if (psi_.is_zero() || !psi_.is_monic())
        throw NotMonic("semidirect model needs a monic defining polynomial");
    d_ = psi_.degree();
    if (d_ < 1) throw PreconditionFailed("semidirect model needs degree >= 1");
    Int c0 = psi_.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw PreconditionFailed("psi(0) must be +-1 for the t-action to be invertible");
    h0_ = companion(psi_);
    h0_inv_ = inverse_unimodular(h0_);
}

std::vector<Int> SemidirectModel::apply_h0_power(std::vector<Int> v, long e) const {
    const IntMatrix& m = e >= 0 ? h0_ : h0_inv_;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) v = m.apply(v);
    return v;
}

SemidirectModel::Element SemidirectModel::identity() const {
    return {std::vector<Int>(static_cast<size_t>(d_), Int(0)), 0};
}

SemidirectModel::Element SemidirectModel::x0(long power) const {
    return {std::vector<Int>(static_cast<size_t>(d_), Int(0)), power};
}

SemidirectModel::Element SemidirectModel::mu(std::vector<Int> v) const {
    if (static_cast<int>(v.size()) != d_)
        throw Error("BadArgument", "model vector has wrong length", EXIT_INTERNAL);
    return {std::move(v), 0};
}

SemidirectModel::Element SemidirectModel::mul(const Element& a, const Element& b) const {
    std::vector<Int> v = apply_h0_power(b.v, -a.e);
    for (int i = 0; i < d_; ++i) v[static_cast<size_t>(i)] += a.v[static_cast<size_t>(i)];
    return {std::move(v), a.e + b.e};
}

SemidirectModel::Element SemidirectModel::inverse(const Element& a) const {
    std::vector<Int> v = apply_h0_power(a.v, a.e);
    for (auto& x : v) x = -x;
    return {std::move(v), -a.e};
}

SemidirectModel::Element SemidirectModel::conjugate(const Element& a, const Element& g) const {
    return mul(mul(inverse(g), a), g);
}

SemidirectModel::Element SemidirectModel::power(const Element& a, long e) const {
    Element base = e < 0 ? inverse(a) : a;
    long n = e < 0 ? -e : e;
    Element r = identity();
    for (long i = 0; i < n; ++i) r = mul(r, base);
    return r;
}

std::vector<Int> SemidirectModel::reduce_poly(const IntPoly& p) const {
    std::vector<Int> c = p.coeffs();
    for (int deg = static_cast<int>(c.size()) - 1; deg >= d_; --deg) {
        Int f = c[static_cast<size_t>(deg)];
        if (f == 0) continue;
        for (int i = 0; i < d_; ++i)
            c[static_cast<size_t>(deg - d_ + i)] -= f * psi_.coeff(i);
        c[static_cast<size_t>(deg)] = 0;
    }
    c.resize(static_cast<size_t>(d_), Int(0));
    return c;
}

std::vector<Int> SemidirectModel::tpow_vector(long k) const {
    std::vector<Int> v(static_cast<size_t>(d_), Int(0));
    v[0] = 1;
    return apply_h0_power(std::move(v), k);
}

SemidirectModel::Element SemidirectModel::generator_image(int i) const {
    if (i == 1) return x0(1);
    return {tpow_vector(i - 2), 1};
}

SemidirectModel::Element SemidirectModel::word_image(const Word& w) const {
    Element r = identity();
    for (const Letter& a : w.atoms()) {
        Element g = generator_image(a.gen);
        r = mul(r, a.exp > 0 ? g : inverse(g));
    }
    return r;
}

SemidirectModel::Element SemidirectModel::x_poly(const IntPoly& p) const {
    return mul(x0(1), mu(reduce_poly(p)));
}

// ------------------------------------------------------------ shared pieces

namespace {

void check_model_relations(const SemidirectModel& model, const CPresentation& pres) {
    for (const ConjRelation& r : pres.relations()) {
        SemidirectModel::Element lhs = model.generator_image(r.left);
        SemidirectModel::Element rhs =
            model.conjugate(model.generator_image(r.right), model.word_image(r.conjugator));
        if (!(lhs == rhs))
            throw VerificationFailed("a constructed relation fails in the semidirect model");
    }
}

Word schreier_generator_word(int l, int j) {
    // a(l,j) = x1^l x_j x1^-(l+1)
    Word w = Word::letter(1, l);
    w.append(j, 1);
    w.append(1, -(l + 1));
    return w;
}

/// Kernel of the map a(l,j) -> t^(j-2-l) from the wrapped module to
/// Z[t]/(psi), lifted to centralizer words; appends the centralizing
/// relations to `rels` and returns the printed kernel words.
std::vector<std::string> centralize_kernel(const SemidirectModel& model,
                                           const IntegralModule& im, int num_generators,
                                           std::vector<ConjRelation>& rels) {
    int n = num_generators - 1;  // module generators per shift level
    int d = model.dim();
    IntMatrix map(d, im.k * n);
    for (int l = 0; l < im.k; ++l)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> v = model.tpow_vector(j - l);
            for (int r = 0; r < d; ++r) map.at(r, l * n + j) = v[static_cast<size_t>(r)];
        }

    std::vector<std::string> printed;
    for (const std::vector<Int>& vec : kernel_of_abelian_map(im.group, map)) {
        if (im.group.is_zero_element(vec)) continue;  // trivial class, nothing to centralize
        Word w;
        for (int idx = 0; idx < im.k * n; ++idx) {
            const Int& c = vec[static_cast<size_t>(idx)];
            if (c == 0) continue;
            if (!c.fits_sint_p())
                throw PreconditionFailed("kernel generator exponent exceeds word-size range");
            int l = idx / n, j = idx % n + 2;
            w.append(schreier_generator_word(l, j).pow(static_cast<int>(c.get_si())));
        }
        printed.push_back(word_to_string(w));
        for (int j = 1; j <= num_generators; ++j) rels.push_back({j, j, w});
    }
    return printed;
}

AlexanderResult verified_delta(const CPresentation& pres, const IntPoly& expect,
                               int expect_components, const char* what) {
    AlexanderResult res = alexander_polynomial(pres);
    if (res.zero || res.delta != expect)
        throw VerificationFailed(std::string(what) + ": computed Alexander polynomial " +
                                 (res.zero ? std::string("0") : poly_to_string(res.delta)) +
                                 " does not match the target " + poly_to_string(expect));
    if (irreducible_components(pres) != expect_components)
        throw VerificationFailed(std::string(what) + ": unexpected component count");
    return res;
}

Word power_product_word(int m, int k) {
    Word w;
    for (int i = 1; i <= m; ++i) w.append(i, k);
    return w;
}

RealizationCertificate unit_certificate(std::string note) {
    RealizationCertificate cert;
    cert.target = IntPoly::one();
    cert.normalization = std::move(note);
    cert.presentation = builtin_abelian(1);
    AlexanderResult res = verified_delta(cert.presentation, IntPoly::one(), 1, "unit target");
    cert.computed_delta = res.delta;
    cert.components = 1;
    cert.central_word = Word::letter(1);
    cert.expanded_degree = 1;
    ConstructionStep step;
    step.kind = "unit";
    step.target = IntPoly::one();
    step.generators = 1;
    cert.steps.push_back(step);
    return cert;
}

CyclotomicFactorization factor_or_precondition(const IntPoly& p, const char* who) {
    try {
        return factor_cyclotomic(p);
    } catch (const NotRootsOfUnity& e) {
        throw PreconditionFailed(std::string(who) + ": roots must all be roots of unity (" +
                                 e.what() + ")");
    }
}

}  // namespace

// ---------------------------------------------------- theorem 1, squarefree

RealizationCertificate realize_irreducible_squarefree(const IntPoly& input,
                                                      const RealizeOptions& opt) {
    CanonicalTarget ct = det_convention_normalize(input);
    if (ct.poly.degree() == 0) return unit_certificate(ct.note);
    IntPoly psi = monic_of(ct.poly);

    factor_or_precondition(psi, "theorem-1 layer");
    if (!is_squarefree(psi))
        throw PreconditionFailed("theorem-1 layer: psi has multiple roots");
    if (eval_at_one(psi) != 1)
        throw PreconditionFailed("theorem-1 layer: psi(1) = " + eval_at_one(psi).get_str() +
                                 ", but 1 is required");

    int d = psi.degree();
    long k = static_cast<long>(root_order(psi));
    check_ceiling(d + 1, opt);

    IntPoly p_conj = *(psi - IntPoly::one()).divided_exactly_by(IntPoly::t() - IntPoly::one());

    // Conjugator word for prod t_i^{c_i} with t_i = x1^-1 x_{i+2}.
    Word w10;
    for (int i = 0; !p_conj.is_zero() && i <= p_conj.degree(); ++i) {
        const Int& c = p_conj.coeff(i);
        if (c == 0) continue;
        if (!c.fits_sint_p())
            throw PreconditionFailed("conjugator exponent exceeds word-size range");
        Word pair = Word::letter(1, -1) * Word::letter(i + 2);
        w10.append(pair.pow(static_cast<int>(c.get_si())));
    }

    std::vector<ConjRelation> rels;
    for (int i = 2; i <= d; ++i) rels.push_back({i + 1, i, Word::letter(1)});
    for (int i = 2; i <= d + 1; ++i)
        rels.push_back({i, i, Word::letter(1, static_cast<int>(k))});
    rels.push_back({2, 1, w10});
    CPresentation pres(d + 1, rels);

    SemidirectModel model(psi);
    if (!(model.tpow_vector(k) == model.tpow_vector(0)))
        throw VerificationFailed("x0^k is not central in the model");
    check_model_relations(model, pres);
    // The defining identity behind the base relation.
    SemidirectModel::Element g10 = model.word_image(w10);
    if (!(model.conjugate(model.x0(1), g10) == model.generator_image(2)))
        throw VerificationFailed("g10^-1 x0 g10 = x_{t^0} fails in the model");

    IntegralModule im = integral_module(pres, static_cast<int>(k));
    std::vector<std::string> kernel_words = centralize_kernel(model, im, d + 1, rels);
    CPresentation centralized(d + 1, rels);

    AlexanderResult res = verified_delta(centralized, ct.poly, 1, "theorem-1 layer");

    RealizationCertificate cert;
    cert.target = ct.poly;
    cert.normalization = ct.note;
    cert.presentation = centralized;
    cert.computed_delta = res.delta;
    cert.components = 1;
    cert.central_word = power_product_word(d + 1, static_cast<int>(k));
    cert.expanded_degree = k * (d + 1);
    ConstructionStep step;
    step.kind = "thm1-layer";
    step.target = ct.poly;
    step.k = static_cast<int>(k);
    step.d = d;
    step.conjugator_poly = p_conj;
    step.conjugator_word = word_to_string(w10);
    step.kernel_words = kernel_words;
    step.generators = d + 1;
    cert.steps.push_back(step);
    return cert;
}

// --------------------------------------------------------- reducible layer

RealizationCertificate realize_reducible_layer(const IntPoly& input, const RealizeOptions& opt) {
    CanonicalTarget ct = det_convention_normalize(input);
    if (ct.poly.degree() == 0)
        throw PreconditionFailed("two-component layer: (t-1) must divide psi");
    IntPoly psi = monic_of(ct.poly);

    factor_or_precondition(psi, "two-component layer");
    if (!is_squarefree(psi))
        throw PreconditionFailed("two-component layer: psi has multiple roots");
    if (eval_at_one(psi) != 0)
        throw PreconditionFailed("two-component layer: (t-1) does not divide psi");

    int d = psi.degree();
    long k = static_cast<long>(root_order(psi));
    check_ceiling(static_cast<int>(k) + 1, opt);
    int m = static_cast<int>(k) + 1;

    std::vector<ConjRelation> rels;
    for (int i = 2; i <= static_cast<int>(k); ++i) rels.push_back({i + 1, i, Word::letter(1)});
    rels.push_back({2, m, Word::letter(1)});  // x1^-1 x_{k+1} x1 = x2
    for (int i = 2; i <= static_cast<int>(k); ++i)
        for (int j = 1; j <= m; ++j)
            rels.push_back({j, j, Word::letter(i, static_cast<int>(k))});
    CPresentation pres(m, rels);

    SemidirectModel model(psi);
    check_model_relations(model, pres);

    IntegralModule im = integral_module(pres, static_cast<int>(k));
    std::vector<std::string> kernel_words = centralize_kernel(model, im, m, rels);
    CPresentation centralized(m, rels);

    AlexanderResult res = verified_delta(centralized, ct.poly, 2, "two-component layer");

    RealizationCertificate cert;
    cert.target = ct.poly;
    cert.normalization = ct.note;
    cert.presentation = centralized;
    cert.computed_delta = res.delta;
    cert.components = 2;
    cert.central_word = power_product_word(m, static_cast<int>(k));
    cert.expanded_degree = k * m;
    ConstructionStep step;
    step.kind = "reducible-layer";
    step.target = ct.poly;
    step.k = static_cast<int>(k);
    step.d = d;
    step.kernel_words = kernel_words;
    step.generators = m;
    cert.steps.push_back(step);
    return cert;
}

// ------------------------------------------------------------ fold product

namespace {

Word shifted_word(const Word& w, int offset) {
    Word out;
    for (const Letter& l : w.letters()) out.append(l.gen + offset, l.exp);
    return out;
}

std::vector<int> centrality_range(const Word& central, int offset) {
    // Generators covered by the central word outside its very last slot.
    std::vector<Letter> atoms = central.atoms();
    std::map<int, int> count;
    for (const Letter& a : atoms) ++count[a.gen];
    --count[atoms.back().gen];
    std::vector<int> out;
    for (const auto& [gen, c] : count)
        if (c >= 1) out.push_back(gen + offset);
    return out;
}

}  // namespace

RealizationCertificate fold_product(const RealizationCertificate& a,
                                    const RealizationCertificate& b,
                                    const RealizeOptions& opt) {
    int m1 = a.presentation.num_generators();
    int m2 = b.presentation.num_generators();
    check_ceiling(m1 + m2, opt);

    std::vector<ConjRelation> rels = a.presentation.relations();
    for (const ConjRelation& r : b.presentation.relations())
        rels.push_back({r.left + m1, r.right + m1, shifted_word(r.conjugator, m1)});
    rels.push_back({m1, m1 + m2, Word()});

    Word w2 = shifted_word(b.central_word, m1);
    if (!a.expanded_degree || !b.expanded_degree)
        throw VerificationFailed("factor without a central word in fold");
    Word conj_for_1 = w2.pow(static_cast<int>(a.expanded_degree));
    for (int g : centrality_range(a.central_word, 0)) rels.push_back({g, g, conj_for_1});
    Word conj_for_2 = a.central_word.pow(static_cast<int>(b.expanded_degree));
    for (int g : centrality_range(b.central_word, m1)) rels.push_back({g, g, conj_for_2});

    CPresentation pres(m1 + m2, rels);
    IntPoly expect = a.target * b.target;
    int expect_components = a.components + b.components - 1;
    AlexanderResult res = verified_delta(pres, expect, expect_components, "product");

    RealizationCertificate cert;
    cert.target = expect;
    cert.presentation = pres;
    cert.computed_delta = res.delta;
    cert.components = expect_components;
    cert.central_word = a.central_word.pow(static_cast<int>(b.expanded_degree)) *
                        w2.pow(static_cast<int>(a.expanded_degree));
    cert.expanded_degree = 2 * a.expanded_degree * b.expanded_degree;
    cert.steps = a.steps;
    cert.steps.insert(cert.steps.end(), b.steps.begin(), b.steps.end());
    ConstructionStep step;
    step.kind = "product";
    step.target = expect;
    step.generators = m1 + m2;
    cert.steps.push_back(step);
    return cert;
}

// ------------------------------------------------------- theorem 1, general

RealizationCertificate realize_irreducible(const IntPoly& input, const RealizeOptions& opt) {
    CanonicalTarget ct = det_convention_normalize(input);
    if (ct.poly.degree() == 0) return unit_certificate(ct.note);
    IntPoly monic = monic_of(ct.poly);

    CyclotomicFactorization fact = factor_or_precondition(monic, "theorem 1");
    if (eval_at_one(monic) != 1)
        throw PreconditionFailed("theorem 1: P(1) = " + eval_at_one(monic).get_str() +
                                 ", but 1 is required");

    unsigned max_mult = 0;
    for (const auto& [n, mult] : fact.factors) max_mult = std::max(max_mult, mult);

    std::optional<RealizationCertificate> cert;
    for (unsigned s = 1; s <= max_mult; ++s) {
        IntPoly layer = IntPoly::one();
        for (const auto& [n, mult] : fact.factors)
            if (mult >= s) layer = layer * cyclotomic(n);
        if (eval_at_one(layer) != 1)
            throw VerificationFailed("multiplicity slice fails the layer condition");
        RealizationCertificate layer_cert = realize_irreducible_squarefree(layer, opt);
        cert = cert ? fold_product(*cert, layer_cert, opt) : layer_cert;
    }
    if (!cert) return unit_certificate(ct.note);

    if (cert->computed_delta != ct.poly)
        throw VerificationFailed("folded layers do not reproduce the target");
    cert->normalization = ct.note;
    return *cert;
}

// ------------------------------------------------------------- theorem 2

RealizationCertificate realize_theorem2(const IntPoly& input, const RealizeOptions& opt) {
    CanonicalTarget ct = det_convention_normalize(input);
    if (ct.poly.degree() == 0) return unit_certificate(ct.note);
    IntPoly monic = monic_of(ct.poly);

    CyclotomicFactorization fact = factor_or_precondition(monic, "theorem 2 condition (i)");
    unsigned n = fact.multiplicity(1);

    // Condition (ii) and the round-robin layer assignment.
    std::vector<std::vector<unsigned long>> layers(n);
    for (unsigned i = 0; i < n; ++i) layers[i].push_back(1);
    for (const auto& [q, mult] : fact.factors) {
        if (q == 1 || !prime_power_base(q)) continue;
        if (mult > n)
            throw PreconditionFailed(
                "theorem 2 condition (ii) violated: multiplicity " + std::to_string(mult) +
                " of Phi_" + std::to_string(q) + " exceeds the multiplicity " +
                std::to_string(n) + " of the root t = 1");
        for (unsigned c = 0; c < mult; ++c) layers[c].push_back(q);
    }

    IntPoly residual = IntPoly::one();
    for (const auto& [r, mult] : fact.factors) {
        if (r == 1 || prime_power_base(r)) continue;
        residual = residual * cyclotomic(r).pow(mult);
    }

    std::optional<RealizationCertificate> cert;
    for (unsigned i = 0; i < n; ++i) {
        IntPoly layer = IntPoly::one();
        for (unsigned long q : layers[i]) layer = layer * cyclotomic(q);
        RealizationCertificate layer_cert = realize_reducible_layer(layer, opt);
        cert = cert ? fold_product(*cert, layer_cert, opt) : layer_cert;
    }
    if (!residual.is_zero() && residual.degree() > 0) {
        RealizationCertificate res_cert = realize_irreducible(residual, opt);
        cert = cert ? fold_product(*cert, res_cert, opt) : res_cert;
    }
    if (!cert) return unit_certificate(ct.note);

    if (cert->computed_delta != ct.poly)
        throw VerificationFailed("theorem-2 layers do not reproduce the target");
    cert->normalization = ct.note;
    return *cert;
}

// ------------------------------------------------------------- theorem 3

namespace {

RealizationCertificate builtin_certificate(const CPresentation& pres, const IntPoly& target,
                                           int components, const std::string& kind) {
    RealizationCertificate cert;
    cert.target = target;
    cert.presentation = pres;
    AlexanderResult res = verified_delta(pres, target, components, kind.c_str());
    cert.computed_delta = res.delta;
    cert.components = components;
    cert.central_word = full_product_word(pres.num_generators());
    cert.expanded_degree = pres.num_generators();
    ConstructionStep step;
    step.kind = kind;
    step.target = target;
    step.generators = pres.num_generators();
    cert.steps.push_back(step);
    return cert;
}

}  // namespace

RealizationCertificate realize_pm(int n, int k, const RealizeOptions& opt) {
    if (n < 0 || k < 0) throw PreconditionFailed("exponents must be nonnegative");
    if (n < k)
        throw NotRealizable("(-1)^(n+k) (t-1)^n (t+1)^k is the Alexander polynomial of a "
                            "Hurwitz C-group iff n >= k; here n = " +
                            std::to_string(n) + " < k = " + std::to_string(k));

    IntPoly target = (IntPoly::t() - IntPoly::one()).pow(static_cast<unsigned>(n)) *
                     (IntPoly::t() + IntPoly::one()).pow(static_cast<unsigned>(k));
    if ((n + k) % 2 == 1) target = -target;

    IntPoly g2_target = IntPoly({-1, 0, 1});  // t^2 - 1
    std::optional<RealizationCertificate> cert;
    for (int i = 0; i < k; ++i) {
        RealizationCertificate f = builtin_certificate(builtin_g2(), g2_target, 2, "g2");
        cert = cert ? fold_product(*cert, f, opt) : f;
    }
    int q = n + 1 - k;
    IntPoly ab_target = (IntPoly::t() - IntPoly::one()).pow(static_cast<unsigned>(q - 1));
    if ((q - 1) % 2 == 1) ab_target = -ab_target;
    RealizationCertificate ab =
        builtin_certificate(builtin_abelian(q), ab_target, q, "abelian");
    cert = cert ? fold_product(*cert, ab, opt) : ab;

    if (cert->computed_delta != target)
        throw VerificationFailed("theorem-3 product does not reproduce the target");
    return *cert;
}

// ------------------------------------------------------------- dispatcher

RealizationCertificate realize_target(const IntPoly& p, RealizeMode mode,
                                      const RealizeOptions& opt) {
    switch (mode) {
        case RealizeMode::Thm1:
            return realize_irreducible(p, opt);
        case RealizeMode::Thm2:
            return realize_theorem2(p, opt);
        case RealizeMode::Thm3: {
            CanonicalTarget ct = det_convention_normalize(p);
            CyclotomicFactorization fact =
                factor_or_precondition(monic_of(ct.poly), "theorem 3");
            for (const auto& [idx, mult] : fact.factors) {
                (void)mult;
                if (idx > 2)
                    throw PreconditionFailed(
                        "theorem 3 applies only to +-(t-1)^n (t+1)^k targets");
            }
            RealizationCertificate cert = realize_pm(static_cast<int>(fact.multiplicity(1)),
                                                     static_cast<int>(fact.multiplicity(2)), opt);
            cert.normalization = ct.note;
            return cert;
        }
        case RealizeMode::Auto:
        default: {
            Realizability verdict = classify_realizability(p);
            switch (verdict.verdict) {
                case RealizabilityVerdict::RealizableThm1:
                    return realize_irreducible(p, opt);
                case RealizabilityVerdict::RealizableThm3:
                    return realize_target(p, RealizeMode::Thm3, opt);
                case RealizabilityVerdict::RealizableThm2:
                    return realize_theorem2(p, opt);
                case RealizabilityVerdict::NotRealizablePM:
                    throw NotRealizable(verdict.detail);
                case RealizabilityVerdict::NotRootsOfUnityNecessary:
                    throw NotRootsOfUnity(verdict.detail);
                case RealizabilityVerdict::UnknownConjecture:
                default:
                    throw PreconditionFailed(
                        "no theorem covers this target (conjecture territory): " +
                        verdict.detail);
            }
        }
    }
}

}  // namespace calex
