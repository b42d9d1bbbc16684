#include "calex/poly.hpp"

#include <algorithm>
#include <mutex>

#include "calex/errors.hpp"

namespace calex {

Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

unsigned long totient(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::optional<unsigned long> prime_power_base(unsigned long n) {
    if (n < 2) return std::nullopt;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            if (m == 1) return p;
            return std::nullopt;
        }
    }
    return m;  // n itself is prime
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<int> coeffs) {
    c_.reserve(coeffs.size());
    for (int v : coeffs) c_.emplace_back(v);
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::t() { return monomial(1, 1); }

IntPoly IntPoly::monomial(Int c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

int IntPoly::degree() const {
    if (is_zero()) throw Error("DegreeOfZero", "degree of the zero polynomial", EXIT_INTERNAL);
    return static_cast<int>(c_.size()) - 1;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw Error("DegreeOfZero", "leading coefficient of zero", EXIT_INTERNAL);
    return c_.back();
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& c) const {
    std::vector<Int> r(c_);
    for (auto& x : r) x *= c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = one();
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) g = int_gcd(g, x);
    return g;
}

std::optional<IntPoly> IntPoly::divided_exactly_by(const IntPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    RatPoly q, r;
    std::tie(q, r) = RatPoly(*this).divmod(RatPoly(d));
    if (!r.is_zero() || !q.is_integral()) return std::nullopt;
    return q.to_int_poly();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

void RatPoly::normalize() {
    for (auto& x : c_) x.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

int RatPoly::degree() const {
    if (is_zero()) throw Error("DegreeOfZero", "degree of the zero polynomial", EXIT_INTERNAL);
    return static_cast<int>(c_.size()) - 1;
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw Error("DegreeOfZero", "leading coefficient of zero", EXIT_INTERNAL);
    return c_.back();
}

Rat RatPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& c) const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= c;
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
    Rat inv = 1 / leading();
    return scaled(inv);
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw Error("DivideByZero", "polynomial division by zero", EXIT_INTERNAL);
    RatPoly r = *this;
    if (r.is_zero() || r.degree() < d.degree()) return {zero(), r};
    std::vector<Rat> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rat(0));
    Rat lead_inv = 1 / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int sh = r.degree() - d.degree();
        Rat f = r.leading() * lead_inv;
        q[static_cast<size_t>(sh)] = f;
        // r -= f * t^sh * d
        std::vector<Rat> rr = r.c_;
        for (size_t i = 0; i < d.c_.size(); ++i) rr[i + static_cast<size_t>(sh)] -= f * d.c_[i];
        r = RatPoly(std::move(rr));
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

int RatPoly::t_valuation() const {
    if (is_zero()) throw Error("DegreeOfZero", "t-valuation of zero", EXIT_INTERNAL);
    int v = 0;
    while (c_[static_cast<size_t>(v)] == 0) ++v;
    return v;
}

RatPoly RatPoly::shifted_down(int a) const {
    if (a == 0 || is_zero()) return *this;
    std::vector<Rat> r(c_.begin() + a, c_.end());
    return RatPoly(std::move(r));
}

bool RatPoly::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int_poly() const {
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const auto& x : c_) {
        if (x.get_den() != 1)
            throw Error("NotIntegral", "polynomial has non-integer coefficients", EXIT_INTERNAL);
        r.push_back(x.get_num());
    }
    return IntPoly(std::move(r));
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int low, std::vector<Int> coeffs) : low_(low), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : low_(0), c_(p.coeffs()) { normalize(); }

void LaurentPoly::normalize() {
    size_t head = 0;
    while (head < c_.size() && c_[head] == 0) ++head;
    if (head == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (head) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(head));
        low_ += static_cast<int>(head);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LaurentPoly LaurentPoly::term(Int c, int exp) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exp;
        p.c_.push_back(std::move(c));
    }
    return p;
}

int LaurentPoly::lowest_exp() const {
    if (is_zero()) throw Error("DegreeOfZero", "exponent range of zero", EXIT_INTERNAL);
    return low_;
}

int LaurentPoly::highest_exp() const {
    if (is_zero()) throw Error("DegreeOfZero", "exponent range of zero", EXIT_INTERNAL);
    return low_ + static_cast<int>(c_.size()) - 1;
}

Int LaurentPoly::coeff(int exp) const {
    int i = exp - low_;
    if (is_zero() || i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(low_, o.low_);
    int hi = std::max(highest_exp(), o.highest_exp());
    std::vector<Int> r(static_cast<size_t>(hi - lo + 1), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(low_ - lo) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
    return LaurentPoly(lo, std::move(r));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return LaurentPoly(low_ + o.low_, std::move(r));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

LaurentPoly LaurentPoly::times_tpow(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return low_ == o.low_ && c_ == o.c_;
}

IntPoly LaurentPoly::unit_normalized() const { return IntPoly(c_); }

IntPoly LaurentPoly::to_poly() const {
    if (is_zero()) return IntPoly::zero();
    if (low_ < 0)
        throw Error("BadArgument", "negative exponent remains in Laurent-to-poly conversion",
                    EXIT_INTERNAL);
    std::vector<Int> c(static_cast<size_t>(low_), Int(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
}

bool LaurentPoly::equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_ || (-a).c_ == b.c_;
}

// -------------------------------------------------------------- cyclotomic

IntPoly CyclotomicFactorization::reconstruct() const {
    IntPoly p = IntPoly::monomial(unit_sign, static_cast<int>(t_power));
    for (const auto& [n, mult] : factors) p = p * cyclotomic(n).pow(mult);
    return p;
}

unsigned CyclotomicFactorization::multiplicity(unsigned long n) const {
    auto it = factors.find(n);
    return it == factors.end() ? 0u : it->second;
}

static IntPoly tpow_minus_one(unsigned long n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

IntPoly cyclotomic(unsigned long n) {
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mtx;
    if (n == 0) throw Error("BadArgument", "cyclotomic index must be positive", EXIT_REFUSED);
    std::lock_guard<std::mutex> lock(mtx);
    // Fill the cache along the divisors of n in ascending order; every proper
    // divisor of d also divides n, so it is already present when d is reached.
    for (unsigned long d : divisors(n)) {
        if (cache.count(d)) continue;
        IntPoly q = tpow_minus_one(d);
        for (unsigned long e : divisors(d)) {
            if (e == d) continue;
            q = *q.divided_exactly_by(cache.at(e));
        }
        cache[d] = q;
    }
    return cache.at(n);
}

CyclotomicFactorization factor_cyclotomic(const IntPoly& p) {
    if (p.is_zero())
        throw Error("BadArgument", "cannot factor the zero polynomial", EXIT_REFUSED);

    CyclotomicFactorization out;

    // Strip the monomial unit t^a.
    int a = 0;
    while (p.coeff(a) == 0) ++a;
    out.t_power = static_cast<unsigned>(a);
    std::vector<Int> shifted(p.coeffs().begin() + a, p.coeffs().end());
    IntPoly rest((std::vector<Int>(shifted)));

    if (!rest.is_zero() && rest.degree() == 0) {
        if (rest.coeff(0) == 1 || rest.coeff(0) == -1) {
            out.unit_sign = rest.coeff(0) == 1 ? 1 : -1;
            return out;
        }
        throw NotRootsOfUnity("constant factor " + rest.coeff(0).get_str() +
                              " is not a unit, so the polynomial is not a product of cyclotomics");
    }

    // Candidates n are bounded through totient(n) <= remaining degree; the
    // scan is ascending so the result is deterministic.
    int deg = rest.degree();
    unsigned long cap = 2ul * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 2;
    for (unsigned long n = 1; n <= cap && !rest.is_zero() && rest.degree() > 0; ++n) {
        if (totient(n) > static_cast<unsigned long>(rest.degree())) continue;
        IntPoly phi = cyclotomic(n);
        unsigned mult = 0;
        while (true) {
            auto q = rest.divided_exactly_by(phi);
            if (!q) break;
            rest = *q;
            ++mult;
            if (rest.degree() == 0) break;
        }
        if (mult) out.factors[n] = mult;
    }

    if (rest.is_zero() || rest.degree() > 0)
        throw NotRootsOfUnity("a factor of degree " + std::to_string(rest.degree()) +
                              " remains that no cyclotomic polynomial divides");
    if (rest.coeff(0) != 1 && rest.coeff(0) != -1)
        throw NotRootsOfUnity("non-unit constant " + rest.coeff(0).get_str() +
                              " remains after removing all cyclotomic factors");
    out.unit_sign = rest.coeff(0) == 1 ? 1 : -1;
    return out;
}

Int eval_at_one(const IntPoly& p) { return p.eval(1); }

unsigned long root_order(const IntPoly& p) {
    CyclotomicFactorization f = factor_cyclotomic(p);
    unsigned long k = 1;
    for (const auto& [n, mult] : f.factors) {
        (void)mult;
        Int l = int_lcm(Int(static_cast<unsigned long>(k)), Int(n));
        if (!l.fits_ulong_p())
            throw Error("Overflow", "root order exceeds machine range", EXIT_REFUSED);
        k = l.get_ui();
    }
    return k;
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero())
        throw Error("BadArgument", "squarefreeness of the zero polynomial", EXIT_REFUSED);
    if (p.degree() == 0) return true;
    RatPoly g = RatPoly::gcd(RatPoly(p), RatPoly(p.derivative()));
    return g.is_zero() || g.degree() == 0;
}

PrimePowerMultiplicities prime_power_multiplicity_bound(const IntPoly& p) {
    CyclotomicFactorization f = factor_cyclotomic(p);
    PrimePowerMultiplicities out;
    for (const auto& [n, mult] : f.factors) {
        if (n == 1)
            out.mult_at_one = mult;
        else if (prime_power_base(n))
            out.prime_power_mult[n] = mult;
    }
    return out;
}

}  // namespace calex
