#pragma once

#include <vector>

#include "blasius/inner.hpp"

namespace blasius {

// Non-rigorous long-double reference for the initial value problem
// F''' + F F'' = 0, F(0)=0, F'(0)=0, F''(0)=1. Adaptive RK4 with step
// doubling and local Richardson extrapolation; requested output points are
// hit exactly by clipping the step.
struct OracleSample {
    long double x, F, Fp, Fpp;
};

struct OracleSolution {
    std::vector<OracleSample> samples;   // at the requested output points
    std::vector<OracleSample> trace;     // every accepted step (dense-ish)
    long double x_max = 0;
    long double tol = 0;                 // requested local tolerance
    long double tol_effective = 0;       // after the long-double clamp
    long double precision_estimate = 0;  // accumulated local error estimates
    long double a_est = 0, b_est = 0, c_est = 0;
};

OracleSolution solve_ivp(long double x_max, long double tol,
                         const std::vector<long double>& outputs = {});

// Fills a_est, b_est from the trajectory end and c_est by inverting the
// two-term far-field form at several mid-range points; throws when the c
// estimates spread more than 1e-6.
void extract_abc(OracleSolution& sol);

struct InnerComparison {
    long double max_dF = 0, max_dFp = 0, max_dFpp = 0;
    int n_samples = 0;
};

// Sup over n sample points of |F - F0|, |F' - F0'|, |F'' - F0''| on [0, 5/2].
InnerComparison compare_inner(const InnerApproximant& inner, int n_samples, long double tol);

// Long-double evaluations of the far-field building blocks (shared with the
// C2 fixed-point iteration and the CLI).
long double oracle_I0(long double t);
long double oracle_J0(long double t);
long double oracle_q0(long double t, long double c);

}  // namespace blasius
