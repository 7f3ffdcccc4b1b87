#include "blasius/special.hpp"

#include <stdexcept>

namespace blasius {

namespace {

// Convergent of depth n of the Laplace continued fraction, evaluated over the
// interval X: K_n(X) = 1/(X + (1/2)/(X + 1/(X + ... + (n/2)/X))).
IntervalValue cf_convergent(const IntervalValue& x, int n) {
    IntervalValue acc = x;
    for (int k = n; k >= 1; --k) acc = x + Rational(k, 2) / acc;
    return Rational(1) / acc;
}

}  // namespace

IntervalValue erfc_enclosure(const IntervalValue& x) {
    if (x.lo() < Rational(1)) throw std::domain_error("erfc_enclosure: argument below supported range (needs x >= 1)");
    // For x > 0 the limit lies between any two consecutive convergents, so the
    // hull of a consecutive pair is a certified bracket of
    // sqrt(pi) e^{x^2} erfc(x); grow the depth until the bracket is tight.
    const Rational target = Rational(1, 10).pow_int(18);
    IntervalValue f = IntervalValue::hull(cf_convergent(x, 2), cf_convergent(x, 3));
    for (int n = 4; n <= 120 && f.width() > target; n += 2)
        f = IntervalValue::hull(cf_convergent(x, n), cf_convergent(x, n + 1));
    IntervalValue emx2 = exp_enclosure(-(x * x));
    return f * emx2 / sqrt_pi_enclosure();
}

IntervalValue erfc_series_enclosure(const Rational& x, int target_digits) {
    if (x.sign() < 0 || x > Rational(8)) throw std::domain_error("erfc_series_enclosure: requires 0 <= x <= 8");
    // S(x) = erf(x) sqrt(pi)/2 = sum (-1)^k x^{2k+1} / (k! (2k+1)).
    // Terms decrease monotonically once x^2/(k+1) < 1; from there consecutive
    // partial sums bracket the limit.
    const Rational x2 = x * x;
    Rational powterm = x;  // x^{2k+1}/k!
    Rational s(0);
    Rational tail_hi(0);
    int k = 0;
    Rational eps = Rational(1, 10).pow_int(target_digits + 5);
    bool positive_last = true;
    while (true) {
        Rational term = powterm / (2 * k + 1);
        s += (k % 2 == 0) ? term : -term;
        positive_last = (k % 2 == 0);
        powterm = powterm * x2 / (k + 1);
        Rational next = powterm / (2 * k + 3);
        if (Rational(static_cast<long>(k)) + 1 > x2 && next < eps) {
            tail_hi = next;
            break;
        }
        ++k;
        if (k > 4000) throw std::runtime_error("erfc_series_enclosure: no convergence");
    }
    // alternating: limit between s and s -/+ next
    IntervalValue S = positive_last ? IntervalValue(s - tail_hi, s) : IntervalValue(s, s + tail_hi);
    // erfc(x) = 1 - 2 S / sqrt(pi)
    return Rational(1) - Rational(2) * S / sqrt_pi_enclosure();
}

std::pair<IntervalValue, IntervalValue> I0_J0_enclosure(const IntervalValue& t) {
    if (t.lo() <= Rational(0)) throw std::domain_error("I0_J0_enclosure: requires t > 0");
    const IntervalValue sqrt_t = sqrt_enclosure(t);
    const IntervalValue sqrt_2t = sqrt_enclosure(Rational(2) * t);
    const IntervalValue i0_raw =
        Rational(1) - sqrt_pi_enclosure() * sqrt_t * exp_enclosure(t) * erfc_enclosure(sqrt_t);
    const IntervalValue j0_raw = Rational(1) - sqrt_pi_enclosure() * sqrt2_enclosure() * sqrt_t *
                                                   exp_enclosure(Rational(2) * t) * erfc_enclosure(sqrt_2t);
    // Laplace representations force I0 in (0, 1/(2t)) and J0 in (0, 1/(4t)).
    const IntervalValue i0_range(Rational(0), (Rational(1) / (Rational(2) * t)).hi());
    const IntervalValue j0_range(Rational(0), (Rational(1) / (Rational(4) * t)).hi());
    auto i0 = IntervalValue::intersect(i0_raw, i0_range);
    auto j0 = IntervalValue::intersect(j0_raw, j0_range);
    if (!i0 || !j0) throw std::runtime_error("I0_J0_enclosure: enclosure inconsistent with Laplace range");
    return {*i0, *j0};
}

IntervalValue I2_enclosure(const IntervalValue& t, const IntervalValue& i0) {
    IntervalValue i1 = Rational(2) * t * i0;
    IntervalValue i2 = Rational(2, 3) * t * (Rational(1) - i1);
    auto clipped = IntervalValue::intersect(i2, IntervalValue(Rational(0), Rational(1)));
    if (!clipped) throw std::runtime_error("I2_enclosure: outside (0,1)");
    return *clipped;
}

IntervalValue Q2_enclosure(const IntervalValue& t) {
    auto [i0, j0] = I0_J0_enclosure(t);
    return t * (Rational(2) * j0 - i0 - i0 * i0);
}

}  // namespace blasius
