#include <doctest.h>

#include <random>

#include "calex/errors.hpp"
#include "calex/poly.hpp"

using namespace calex;

namespace {
IntPoly tm1() { return IntPoly::t() - IntPoly::one(); }
IntPoly tp1() { return IntPoly::t() + IntPoly::one(); }
}  // namespace

TEST_CASE("cyclotomic base cases") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
}

TEST_CASE("product of Phi_d over divisors is t^n - 1") {
    for (unsigned long n = 1; n <= 60; ++n) {
        IntPoly prod = IntPoly::one();
        for (unsigned long d : divisors(n)) prod = prod * cyclotomic(d);
        IntPoly expect = IntPoly::monomial(1, static_cast<int>(n)) - IntPoly::one();
        CHECK(prod == expect);
        CHECK(cyclotomic(n).is_monic());
    }
}

TEST_CASE("Phi_k(1) detects prime powers") {
    for (unsigned long k = 2; k <= 60; ++k) {
        Int v = eval_at_one(cyclotomic(k));
        auto p = prime_power_base(k);
        if (p)
            CHECK(v == Int(*p));
        else
            CHECK(v == 1);
    }
}

TEST_CASE("eval_at_one") {
    CHECK(eval_at_one(cyclotomic(4)) == 2);
    CHECK(eval_at_one(cyclotomic(6)) == 1);
    IntPoly q({3, 0, -2, 7});
    CHECK(eval_at_one(tm1() * q) == 0);
}

TEST_CASE("factor_cyclotomic examples") {
    CyclotomicFactorization f = factor_cyclotomic(tm1() * tm1() * tp1());
    CHECK(f.factors == std::map<unsigned long, unsigned>{{1, 2}, {2, 1}});
    CHECK(f.unit_sign == 1);
    CHECK(f.t_power == 0);

    f = factor_cyclotomic(IntPoly({1, 1, 1}));
    CHECK(f.factors == std::map<unsigned long, unsigned>{{3, 1}});

    CHECK_THROWS_AS(factor_cyclotomic(IntPoly({-2, 0, 1})), NotRootsOfUnity);
    CHECK_THROWS_AS(factor_cyclotomic(IntPoly({2, 2, 2})), NotRootsOfUnity);
}

TEST_CASE("factor_cyclotomic strips the monomial unit") {
    IntPoly p = IntPoly::monomial(-1, 3) * cyclotomic(6);
    CyclotomicFactorization f = factor_cyclotomic(p);
    CHECK(f.unit_sign == -1);
    CHECK(f.t_power == 3);
    CHECK(f.reconstruct() == p);
}

TEST_CASE("factorization reconstructs the input exactly") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> idx(1, 12), mult(0, 2), coin(0, 1), tp(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p = IntPoly::monomial(coin(rng) ? 1 : -1, tp(rng));
        for (int j = 0; j < 3; ++j) {
            unsigned m = static_cast<unsigned>(mult(rng));
            if (m) p = p * cyclotomic(static_cast<unsigned long>(idx(rng))).pow(m);
        }
        CyclotomicFactorization f = factor_cyclotomic(p);
        CHECK(f.reconstruct() == p);
    }
}

TEST_CASE("root_order") {
    CHECK(root_order(cyclotomic(6)) == 6);
    CHECK(root_order(tm1() * tp1()) == 2);
    IntPoly p = IntPoly({1, 1, 1}) * tp1();  // (t^2+t+1)(t+1)
    CHECK(root_order(p) == 6);
    // squarefree, so p divides t^6 - 1
    IntPoly t6m1 = IntPoly::monomial(1, 6) - IntPoly::one();
    CHECK(t6m1.divided_exactly_by(p).has_value());
}

TEST_CASE("is_squarefree") {
    CHECK_FALSE(is_squarefree(tm1() * tm1()));
    CHECK(is_squarefree(IntPoly({1, -1, 1})));
    CHECK(is_squarefree(IntPoly::constant(7)));
}

TEST_CASE("prime_power_multiplicity_bound") {
    auto r = prime_power_multiplicity_bound(tm1().pow(2) * tp1().pow(3));
    CHECK(r.prime_power_mult == std::map<unsigned long, unsigned>{{2, 3}});
    CHECK(r.mult_at_one == 2);

    r = prime_power_multiplicity_bound(cyclotomic(6).pow(2));
    CHECK(r.prime_power_mult.empty());
    CHECK(r.mult_at_one == 0);

    r = prime_power_multiplicity_bound(tm1() * cyclotomic(4));
    CHECK(r.prime_power_mult == std::map<unsigned long, unsigned>{{4, 1}});
    CHECK(r.mult_at_one == 1);
}

TEST_CASE("polynomial arithmetic basics") {
    IntPoly a({3, -2, 0, 5}), b({-1, 4, 7});
    CHECK((a * b).eval(3) == a.eval(3) * b.eval(3));
    CHECK((a + b) - b == a);
    CHECK((a * b).divided_exactly_by(b).value() == a);
    CHECK_FALSE((a * b + IntPoly::one()).divided_exactly_by(b).has_value());
    CHECK(a.derivative() == IntPoly({-2, 0, 15}));
    CHECK(IntPoly::zero().is_zero());
    CHECK(IntPoly({0, 0, 0}).is_zero());
    CHECK(IntPoly({6, -4}).content() == 2);
}

TEST_CASE("rational gcd and division") {
    RatPoly g = RatPoly::gcd(RatPoly(tm1() * tm1() * tp1()), RatPoly(tm1() * cyclotomic(4)));
    CHECK(g == RatPoly(tm1()));
    auto [q, r] = RatPoly(IntPoly({1, 0, 0, 1})).divmod(RatPoly(IntPoly({1, 1})));
    CHECK(r.is_zero());
    CHECK(q == RatPoly(IntPoly({1, -1, 1})));
}

TEST_CASE("laurent polynomials") {
    LaurentPoly a = LaurentPoly::term(2, -3) + LaurentPoly::term(-1, 1);
    CHECK(a.lowest_exp() == -3);
    CHECK(a.highest_exp() == 1);
    LaurentPoly shifted = a.times_tpow(5);
    CHECK(shifted.lowest_exp() == 2);
    CHECK(shifted.coeffs() == a.coeffs());
    CHECK(LaurentPoly::equal_up_to_unit(a, -shifted));
    CHECK_FALSE(LaurentPoly::equal_up_to_unit(a, a + LaurentPoly::term(1, 0)));
    CHECK((a - a).is_zero());
    // multiplication shifts exponents additively
    CHECK((LaurentPoly::term(1, -2) * LaurentPoly::term(3, 5)) == LaurentPoly::term(3, 3));
    // embedding with padding keeps the offset
    LaurentPoly b = LaurentPoly::term(1, 2) + LaurentPoly::term(4, 0);
    CHECK(b.to_poly() == IntPoly({4, 0, 1}));
}

TEST_CASE("number theory helpers") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK(prime_power_base(8) == 2ul);
    CHECK(prime_power_base(27) == 3ul);
    CHECK_FALSE(prime_power_base(6).has_value());
    CHECK_FALSE(prime_power_base(1).has_value());
    CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
}
