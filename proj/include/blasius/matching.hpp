#pragma once

#include <array>
#include <string>

#include "blasius/contraction.hpp"
#include "blasius/farfield.hpp"

namespace blasius {

// Parameter box around the nominal triple, in the weighted metric
// sqrt((a-a0)^2 + (b-b0)^2/4 + (c-c0)^2/4) <= rho0.
struct TripleEnclosure {
    Rational a0, b0, c0, rho0;
    IntervalValue a, b, c;  // [a0-rho0, a0+rho0], [b0-2rho0, b0+2rho0], same for c
};

TripleEnclosure make_triple(const Rational& rho0);
const Rational& a0_center();
const Rational& b0_center();
const Rational& c0_center();

// t_m = (a/2)(5/2 + b/a)^2; exact at rational (a, b).
Rational t_m_at(const Rational& a, const Rational& b);
// Range of t_m over the box, via exact corner evaluation (t_m is increasing
// in both a and b here since 5a/2 + b > 0 and b < 0 < a over the box).
IntervalValue t_m_bounds(const TripleEnclosure& triple);

struct MatchCert {
    IntervalValue residual_a, residual_b, residual_c;
    IntervalValue residual_norm;
    std::array<std::array<IntervalValue, 3>, 3> jacobian;
    IntervalValue J_norm2;
    IntervalValue alpha;
    IntervalValue t_m_range;
    Rational rho0;
    bool verdict = false;
    std::string failure;
};

// Right-endpoint error bounds fed in from the inner pipeline.
struct InnerEndpointBounds {
    IntervalValue E, Ep, Epp;
};

// Residual components of the fixed-point map at the center triple.
//   |a0-N1|, |b0-N2|, |c0-N3| and the weighted norm.
void residual_bound(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                    const FarFieldConstants& k, const TripleEnclosure& triple, MatchCert& cert);

// Nine worst-case Jacobian entry bounds over the box and the weighted
// Frobenius bound for ||J||_2.
void jacobian_bound(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                    const FarFieldConstants& k, const TripleEnclosure& triple, MatchCert& cert);

// Pure fixed-point check: alpha < 1 and residual_norm <= (1 - alpha) rho0.
std::pair<bool, std::string> lemma_match_verdict(const IntervalValue& residual_norm,
                                                 const IntervalValue& alpha, const Rational& rho0);

// Contraction verdict: residual_norm <= (1 - alpha) rho0 with alpha < 1.
MatchCert certify_matching(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                           const FarFieldConstants& k, const TripleEnclosure& triple);

struct WallStress {
    IntervalValue fpp0;          // a^{-3/2} over the certified a-interval
    IntervalValue fpp0_blasius;  // rescaled to the half-coefficient convention
};

WallStress wall_stress(const TripleEnclosure& triple);

struct C2Triple {
    long double a, b, c;
    int iterations;
};

// Iterates the matching map with the error terms dropped, yielding the
// parameter choice that makes the two-piece representation C^2 at 5/2.
C2Triple c2_triple(const InnerApproximant& inner, int max_iter, long double tol);

}  // namespace blasius
