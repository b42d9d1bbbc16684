#ifndef CALEX_POLY_HPP
#define CALEX_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace calex {

using Int = mpz_class;
using Rat = mpq_class;

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

/// Euler totient.
unsigned long totient(unsigned long n);
/// Returns the prime p when n = p^m with m >= 1, nothing otherwise.
std::optional<unsigned long> prime_power_base(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

/// Univariate polynomial over Z, coefficients ascending by degree.
/// The zero polynomial is the empty coefficient sequence; degree() is
/// only defined for nonzero polynomials.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(Int c);
    static IntPoly t();
    static IntPoly monomial(Int c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const;  // requires nonzero
    const Int& leading() const;
    Int coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const Int& c) const;
    IntPoly pow(unsigned e) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly derivative() const;
    Int eval(const Int& x) const;
    Int content() const;  // gcd of coefficients; 0 for the zero polynomial
    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Exact quotient in Z[t], or nothing when the division does not come out
    /// exactly with integer coefficients.
    std::optional<IntPoly> divided_exactly_by(const IntPoly& d) const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Univariate polynomial over Q; the workhorse behind gcds and the Q[t]
/// Smith form. Same representation conventions as IntPoly.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(const IntPoly& p);  // NOLINT: implicit by design

    static RatPoly zero() { return RatPoly(); }
    static RatPoly one() { return constant(1); }
    static RatPoly constant(Rat c);

    bool is_zero() const { return c_.empty(); }
    int degree() const;
    const Rat& leading() const;
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly scaled(const Rat& c) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;  // requires nonzero

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

    /// Monic gcd over Q[t]; gcd(0,0) = 0.
    static RatPoly gcd(RatPoly a, RatPoly b);

    /// Largest a with t^a dividing *this (0 for constants; requires nonzero).
    int t_valuation() const;
    RatPoly shifted_down(int a) const;  // divide by t^a

    /// True when all coefficients are integers.
    bool is_integral() const;
    IntPoly to_int_poly() const;  // requires is_integral()

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Element of Z[t, t^-1]. coeffs()[i] is the coefficient of t^(low+i);
/// both ends of the stored range are nonzero unless the value is zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int low, std::vector<Int> coeffs);
    LaurentPoly(const IntPoly& p);  // NOLINT: implicit by design

    static LaurentPoly term(Int c, int exp);

    bool is_zero() const { return c_.empty(); }
    int lowest_exp() const;   // requires nonzero
    int highest_exp() const;  // requires nonzero
    Int coeff(int exp) const;
    const std::vector<Int>& coeffs() const { return c_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly times_tpow(int k) const;  // shifts exponents, coefficients untouched
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// The polynomial t^(-lowest_exp) * this, i.e. shifted so the lowest
    /// exponent becomes 0. Zero maps to zero.
    IntPoly unit_normalized() const;

    /// Embedding into Z[t]; requires lowest_exp() >= 0 (pads with zeros).
    IntPoly to_poly() const;

    /// True when the two values differ by a factor +-t^k.
    static bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

private:
    void normalize();
    int low_ = 0;
    std::vector<Int> c_;
};

/// Multiset of cyclotomic indices with an explicit monomial unit, so that
/// unit_sign * t^t_power * prod Phi_n^mult reproduces the input exactly.
struct CyclotomicFactorization {
    std::map<unsigned long, unsigned> factors;
    int unit_sign = 1;
    unsigned t_power = 0;

    IntPoly reconstruct() const;
    unsigned multiplicity(unsigned long n) const;
};

/// The n-th cyclotomic polynomial, computed by exact division of t^n - 1
/// by the lower Phi_d and cached.
IntPoly cyclotomic(unsigned long n);

/// Factors p into cyclotomics; throws NotRootsOfUnity when a factor remains
/// that no Phi_n divides (equivalently, p has a root off the unit circle or
/// a non-unit content).
CyclotomicFactorization factor_cyclotomic(const IntPoly& p);

Int eval_at_one(const IntPoly& p);

/// Smallest k such that every root of p is a k-th root of unity.
unsigned long root_order(const IntPoly& p);

bool is_squarefree(const IntPoly& p);

struct PrimePowerMultiplicities {
    std::map<unsigned long, unsigned> prime_power_mult;  // index q = p^m >= 2 -> mult
    unsigned mult_at_one = 0;                            // multiplicity of Phi_1
};
PrimePowerMultiplicities prime_power_multiplicity_bound(const IntPoly& p);

}  // namespace calex

#endif
