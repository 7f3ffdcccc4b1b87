#pragma once

#include <optional>
#include <string>
#include <utility>

#include "blasius/rational.hpp"

namespace blasius {

// Denominator cap applied by outward rounding after interval operations.
// Pure-Rational code paths never round; only IntervalValue endpoints do.
inline constexpr unsigned kDenBits = 256;

// Closed interval with exact rational endpoints. All operations are
// inclusion-monotone: the result contains op(x) for every point x inside.
class IntervalValue {
public:
    IntervalValue() : lo_(0), hi_(0) {}
    IntervalValue(Rational lo, Rational hi);
    explicit IntervalValue(const Rational& point) : lo_(point), hi_(point) {}
    static IntervalValue point(const Rational& v) { return IntervalValue(v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const IntervalValue& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool subset_of(const IntervalValue& o) const { return o.contains(*this); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool strictly_positive() const { return lo_.sign() > 0; }
    bool strictly_negative() const { return hi_.sign() < 0; }

    // Upper bound for |x| over the interval.
    Rational abs_hi() const { return max(lo_.abs(), hi_.abs()); }
    // Enclosure of |x|.
    IntervalValue abs() const;

    IntervalValue operator-() const { return IntervalValue(-hi_, -lo_); }
    friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b);
    friend IntervalValue operator-(const IntervalValue& a, const IntervalValue& b);
    friend IntervalValue operator*(const IntervalValue& a, const IntervalValue& b);
    friend IntervalValue operator/(const IntervalValue& a, const IntervalValue& b);

    friend IntervalValue operator+(const IntervalValue& a, const Rational& b) { return a + IntervalValue(b); }
    friend IntervalValue operator-(const IntervalValue& a, const Rational& b) { return a - IntervalValue(b); }
    friend IntervalValue operator*(const IntervalValue& a, const Rational& b) { return a * IntervalValue(b); }
    friend IntervalValue operator/(const IntervalValue& a, const Rational& b) { return a / IntervalValue(b); }
    friend IntervalValue operator+(const Rational& a, const IntervalValue& b) { return IntervalValue(a) + b; }
    friend IntervalValue operator-(const Rational& a, const IntervalValue& b) { return IntervalValue(a) - b; }
    friend IntervalValue operator*(const Rational& a, const IntervalValue& b) { return IntervalValue(a) * b; }
    friend IntervalValue operator/(const Rational& a, const IntervalValue& b) { return IntervalValue(a) / b; }

    // Enclosure of x^k over the interval (k >= 0).
    IntervalValue pow_int(long k) const;

    static IntervalValue hull(const IntervalValue& a, const IntervalValue& b) {
        return IntervalValue(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
    }
    static std::optional<IntervalValue> intersect(const IntervalValue& a, const IntervalValue& b);

    std::string to_string(int digits = 17) const;

private:
    IntervalValue rounded() const;
    Rational lo_, hi_;
};

// Certified enclosures of elementary functions. `bits` controls the target
// precision of the result (endpoints land on a 2^-bits grid).
IntervalValue sqrt_enclosure(const IntervalValue& x, unsigned bits = 128);
IntervalValue exp_enclosure(const IntervalValue& x);
// x^{3/2} and x^{-1/2} style helpers used throughout the far-field bounds.
IntervalValue pow_3_2_enclosure(const IntervalValue& x, unsigned bits = 128);
IntervalValue inv_sqrt_enclosure(const IntervalValue& x, unsigned bits = 128);

// Shared interval constants (bisection/series generated once at startup).
const IntervalValue& sqrt2_enclosure();   // width <= 2^-100
const IntervalValue& pi_enclosure();      // width <= 1e-30
const IntervalValue& sqrt_pi_enclosure();

}  // namespace blasius
