#include "blasius/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace blasius {

IntervalValue::IntervalValue(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("IntervalValue: lo > hi");
}

IntervalValue IntervalValue::rounded() const {
    if (lo_.den_bits() <= kDenBits && hi_.den_bits() <= kDenBits) return *this;
    return IntervalValue(lo_.floor_to_den_bits(kDenBits), hi_.ceil_to_den_bits(kDenBits));
}

IntervalValue IntervalValue::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return IntervalValue(Rational(0), abs_hi());
}

IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
    return IntervalValue(a.lo_ + b.lo_, a.hi_ + b.hi_).rounded();
}

IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
    return IntervalValue(a.lo_ - b.hi_, a.hi_ - b.lo_).rounded();
}

IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    Rational lo = min(min(p1, p2), min(p3, p4));
    Rational hi = max(max(p1, p2), max(p3, p4));
    return IntervalValue(lo, hi).rounded();
}

IntervalValue operator/(const IntervalValue& a, const IntervalValue& b) {
    if (b.contains_zero()) throw std::domain_error("IntervalValue: division by interval containing 0");
    Rational p1 = a.lo_ / b.lo_, p2 = a.lo_ / b.hi_, p3 = a.hi_ / b.lo_, p4 = a.hi_ / b.hi_;
    Rational lo = min(min(p1, p2), min(p3, p4));
    Rational hi = max(max(p1, p2), max(p3, p4));
    return IntervalValue(lo, hi).rounded();
}

IntervalValue IntervalValue::pow_int(long k) const {
    if (k < 0) return Rational(1) / pow_int(-k);
    if (k == 0) return IntervalValue(Rational(1));
    if (k % 2 == 1 || lo_.sign() >= 0)
        return IntervalValue(lo_.pow_int(k), hi_.pow_int(k)).rounded();
    if (hi_.sign() <= 0)
        return IntervalValue(hi_.pow_int(k), lo_.pow_int(k)).rounded();
    // even power over an interval straddling zero
    return IntervalValue(Rational(0), max(lo_.pow_int(k), hi_.pow_int(k))).rounded();
}

std::optional<IntervalValue> IntervalValue::intersect(const IntervalValue& a, const IntervalValue& b) {
    Rational lo = max(a.lo_, b.lo_);
    Rational hi = min(a.hi_, b.hi_);
    if (lo > hi) return std::nullopt;
    return IntervalValue(lo, hi);
}

std::string IntervalValue::to_string(int digits) const {
    return "[" + lo_.to_decimal_string(digits, -1) + ", " + hi_.to_decimal_string(digits, +1) + "]";
}

namespace {

// floor(sqrt(x)) on the 2^-bits grid: s/2^bits <= sqrt(x) < (s+1)/2^bits.
Rational sqrt_lower(const Rational& x, unsigned bits) {
    if (x.sign() < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    mpz_class scaled = (x.num() << (2 * bits)) / x.den();  // floor(x * 4^bits)
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den(1);
    den <<= bits;
    mpq_class q(s, den);
    q.canonicalize();
    return Rational(q);
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
    if (x.sign() < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    mpz_class scaled = (x.num() << (2 * bits)) / x.den();
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    s += 1;
    mpz_class den(1);
    den <<= bits;
    mpq_class q(s, den);
    q.canonicalize();
    return Rational(q);
}

// Certified e^x for a rational point, via Taylor series with an outward
// remainder bound. Requires |x| reduced: we split x = n + f with |f| <= 1/2
// and use e^n from a cached enclosure of e.
IntervalValue exp_point(const Rational& x);

const IntervalValue& e_enclosure() {
    static const IntervalValue kE = [] {
        // e = sum 1/k!; tail after n terms < 2/(n+1)!
        Rational s(0), term(1);
        int n = 40;
        for (int k = 0; k <= n; ++k) {
            s += term;
            term /= (k + 1);
        }
        return IntervalValue(s, s + term * 2);
    }();
    return kE;
}

IntervalValue exp_small(const Rational& f) {
    // |f| <= 1/2: sum f^k/k! with alternating-or-geometric tail bound
    // tail after n terms: |f|^{n+1}/(n+1)! * 1/(1-|f|/(n+2))
    const int n = 40;
    Rational s(0), term(1);
    for (int k = 0; k <= n; ++k) {
        s += term;
        term = term * f / (k + 1);
    }
    Rational tail = term.abs() / (Rational(1) - Rational(1, 2) / (n + 2));
    return IntervalValue(s - tail, s + tail);
}

IntervalValue exp_point(const Rational& x) {
    mpz_class nfloor = x.floor();
    if (!nfloor.fits_slong_p()) throw std::domain_error("exp_enclosure: argument too large");
    long n = nfloor.get_si();
    Rational f = x - Rational(mpz_class(nfloor));
    // f in [0,1); shift to [-1/2, 1/2)
    if (f > Rational(1, 2)) {
        f -= 1;
        n += 1;
    }
    IntervalValue en = e_enclosure().pow_int(n);
    return en * exp_small(f);
}

}  // namespace

IntervalValue sqrt_enclosure(const IntervalValue& x, unsigned bits) {
    return IntervalValue(sqrt_lower(x.lo(), bits), sqrt_upper(x.hi(), bits));
}

IntervalValue exp_enclosure(const IntervalValue& x) {
    IntervalValue lo = exp_point(x.lo());
    IntervalValue hi = exp_point(x.hi());
    return IntervalValue(lo.lo(), hi.hi());
}

IntervalValue pow_3_2_enclosure(const IntervalValue& x, unsigned bits) {
    return x.pow_int(1) * sqrt_enclosure(x, bits);
}

IntervalValue inv_sqrt_enclosure(const IntervalValue& x, unsigned bits) {
    return Rational(1) / sqrt_enclosure(x, bits);
}

const IntervalValue& sqrt2_enclosure() {
    static const IntervalValue kSqrt2 = sqrt_enclosure(IntervalValue(Rational(2)), 128);
    return kSqrt2;
}

const IntervalValue& pi_enclosure() {
    static const IntervalValue kPi = [] {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239), alternating series give
        // two-sided bounds on each arctangent.
        auto atan_inv = [](long m, int terms) {
            Rational inv(1, m);
            Rational inv2 = inv * inv;
            Rational term = inv, s(0);
            for (int k = 0; k < terms; ++k) {
                s += (k % 2 == 0 ? term : -term) / (2 * k + 1);
                term *= inv2;
            }
            // alternating with decreasing terms: s_n and s_n + next bracket
            Rational next = term / (2 * terms + 1);
            if (terms % 2 == 0) return IntervalValue(s, s + next);
            return IntervalValue(s - next, s);
        };
        IntervalValue a5 = atan_inv(5, 25);
        IntervalValue a239 = atan_inv(239, 8);
        return Rational(16) * a5 - Rational(4) * a239;
    }();
    return kPi;
}

const IntervalValue& sqrt_pi_enclosure() {
    static const IntervalValue kSqrtPi = sqrt_enclosure(pi_enclosure(), 128);
    return kSqrtPi;
}

}  // namespace blasius
