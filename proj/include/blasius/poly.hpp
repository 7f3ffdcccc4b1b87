#pragma once

#include <utility>
#include <vector>

#include "blasius/interval.hpp"
#include "blasius/rational.hpp"

namespace blasius {

// Dense polynomial with exact rational coefficients, coeffs[k] multiplying x^k.
// Trailing zero coefficients are stripped so degree() is meaningful.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }
    static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
    static RationalPoly monomial(int k, const Rational& v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }

    RationalPoly operator-() const;
    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    RationalPoly scaled(const Rational& s) const;

    Rational eval(const Rational& x) const;                 // exact Horner
    IntervalValue eval_interval(const IntervalValue& x) const;  // interval Horner
    double eval_double(double x) const;
    long double eval_long_double(long double x) const;

    RationalPoly derivative() const;
    RationalPoly antiderivative() const;  // constant term zero

private:
    void strip();
    std::vector<Rational> c_;
};

// p composed with the affine map sigma(tau) = (xl+xr)/2 + (xr-xl)/2 * tau,
// so the result over tau in [-1,1] traces p over [xl, xr]. Exact.
RationalPoly poly_affine_recenter(const RationalPoly& p, const Rational& xl, const Rational& xr);

// Enclosures of min and max of a degree<=3 polynomial over tau in [-1,1].
// Critical points come from the exact quadratic derivative with an
// outward-rounded square-root enclosure.
std::pair<IntervalValue, IntervalValue> cubic_minmax(const RationalPoly& p3);

// Range enclosure of p over [xl, xr]: recenter, split into the cubic head and
// the l^1-bounded tail sum_{k>=4} |a_k|; returns [m - E, M + E].
IntervalValue range_bound(const RationalPoly& p, const Rational& xl, const Rational& xr);

// Exact definite integral via the antiderivative.
Rational definite_integral(const RationalPoly& p, const Rational& xl, const Rational& xr);

}  // namespace blasius
