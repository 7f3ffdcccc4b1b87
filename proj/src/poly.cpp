#include "blasius/poly.hpp"

#include <stdexcept>

namespace blasius {

void RationalPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalPoly RationalPoly::monomial(int k, const Rational& v) {
    if (k < 0) throw std::invalid_argument("RationalPoly::monomial: negative power");
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    c.back() = v;
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return RationalPoly(std::move(c));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntervalValue RationalPoly::eval_interval(const IntervalValue& x) const {
    IntervalValue acc{Rational(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + IntervalValue(*it);
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

long double RationalPoly::eval_long_double(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::antiderivative() const {
    std::vector<Rational> c(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    return RationalPoly(std::move(c));
}

RationalPoly poly_affine_recenter(const RationalPoly& p, const Rational& xl, const Rational& xr) {
    if (!(xl < xr)) throw std::invalid_argument("poly_affine_recenter: requires xl < xr");
    const Rational mid = (xl + xr) / 2;
    const Rational half = (xr - xl) / 2;
    // Horner-style composition: r(tau) = p(mid + half*tau)
    RationalPoly r;
    const RationalPoly sigma({mid, half});
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        r = r * sigma + RationalPoly::constant(*it);
    return r;
}

std::pair<IntervalValue, IntervalValue> cubic_minmax(const RationalPoly& p3) {
    if (p3.degree() > 3) throw std::invalid_argument("cubic_minmax: degree > 3");
    const Rational a0 = p3.coeff(0), a1 = p3.coeff(1), a2 = p3.coeff(2), a3 = p3.coeff(3);
    // candidate points: endpoints, plus enclosures of critical points of the
    // derivative 3 a3 t^2 + 2 a2 t + a1 inside [-1, 1]
    std::vector<IntervalValue> cands;
    cands.emplace_back(Rational(-1));
    cands.emplace_back(Rational(1));
    const Rational A = Rational(3) * a3, B = Rational(2) * a2, C = a1;
    const IntervalValue unit{Rational(-1), Rational(1)};
    if (!A.is_zero()) {
        Rational disc = B * B - Rational(4) * A * C;
        if (disc.sign() >= 0) {
            IntervalValue sq = sqrt_enclosure(IntervalValue(disc), 192);
            for (int s : {-1, +1}) {
                IntervalValue root = (IntervalValue(-B) + (s > 0 ? sq : -sq)) / (Rational(2) * A);
                if (auto clip = IntervalValue::intersect(root, unit)) cands.push_back(*clip);
            }
        }
    } else if (!B.is_zero()) {
        IntervalValue root{-C / B};
        if (auto clip = IntervalValue::intersect(root, unit)) cands.push_back(*clip);
    }
    IntervalValue mn = p3.eval_interval(cands[0]);
    IntervalValue mx = mn;
    for (std::size_t i = 1; i < cands.size(); ++i) {
        IntervalValue v = p3.eval_interval(cands[i]);
        if (v.lo() < mn.lo()) mn = v;
        if (v.hi() > mx.hi()) mx = v;
    }
    // The true min is min over candidates; each candidate value is an
    // enclosure, so take hulls conservatively.
    Rational mn_hi = mn.hi(), mx_lo = mx.lo();
    for (const auto& cv : cands) {
        IntervalValue v = p3.eval_interval(cv);
        mn_hi = min(mn_hi, v.hi());
        mx_lo = max(mx_lo, v.lo());
    }
    return {IntervalValue(mn.lo(), mn_hi), IntervalValue(mx_lo, mx.hi())};
}

IntervalValue range_bound(const RationalPoly& p, const Rational& xl, const Rational& xr) {
    if (!(xl < xr)) throw std::invalid_argument("range_bound: requires xl < xr");
    RationalPoly rc = poly_affine_recenter(p, xl, xr);
    RationalPoly head({rc.coeff(0), rc.coeff(1), rc.coeff(2), rc.coeff(3)});
    auto [mn, mx] = cubic_minmax(head);
    Rational tail(0);
    for (int k = 4; k <= rc.degree(); ++k) tail += rc.coeff(k).abs();
    return IntervalValue(mn.lo() - tail, mx.hi() + tail);
}

Rational definite_integral(const RationalPoly& p, const Rational& xl, const Rational& xr) {
    RationalPoly a = p.antiderivative();
    return a.eval(xr) - a.eval(xl);
}

}  // namespace blasius
