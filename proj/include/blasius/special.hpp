#pragma once

#include <utility>

#include "blasius/interval.hpp"

namespace blasius {

// Certified enclosure of erfc over the argument interval x (requires x.lo >= 1).
// Uses the Laplace continued fraction
//   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// whose successive convergents bracket the limit for x > 0; the bracket pair
// is evaluated in interval arithmetic and combined with enclosures of
// e^{-x^2} and 1/sqrt(pi). Width <= 1e-12 for point arguments.
IntervalValue erfc_enclosure(const IntervalValue& x);

// Independent reference: erfc via the exact-rational Maclaurin series of erf
// (alternating once k > x^2, so consecutive partial sums bracket). Slower but
// reaches ~50 digits; used by the oracle/tests to cross-check the continued
// fraction route. Requires 0 <= x <= 8.
IntervalValue erfc_series_enclosure(const Rational& x, int target_digits = 50);

// Enclosures of I0(t) = 1 - sqrt(pi t) e^t erfc(sqrt t) and
// J0(t) = 1 - sqrt(2 pi t) e^{2t} erfc(sqrt(2t)), intersected with their
// Laplace-representation ranges (0, 1/(2t)) and (0, 1/(4t)).
std::pair<IntervalValue, IntervalValue> I0_J0_enclosure(const IntervalValue& t);

// I2(t) = t * Laplace[(1+s)^{-5/2}] recovered exactly from I1 = 2 t I0 via
// 1 - I1 = (3/(2t)) I2; lies in (0, 1).
IntervalValue I2_enclosure(const IntervalValue& t, const IntervalValue& i0);

// Q2(t) = t (2 J0 - I0 - I0^2), the second transseries coefficient at fixed t.
IntervalValue Q2_enclosure(const IntervalValue& t);

}  // namespace blasius
