#pragma once

#include <optional>
#include <vector>

#include "blasius/special.hpp"

namespace blasius {

// Exact element of Q[sqrt(2)]: a + b*sqrt(2). Sign decisions are exact.
struct Qsqrt2 {
    Rational a, b;
    Qsqrt2() : a(0), b(0) {}
    Qsqrt2(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    static Qsqrt2 rt2(long k = 1) { return Qsqrt2(Rational(0), Rational(k)); }

    friend Qsqrt2 operator+(const Qsqrt2& x, const Qsqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend Qsqrt2 operator-(const Qsqrt2& x, const Qsqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend Qsqrt2 operator*(const Qsqrt2& x, const Qsqrt2& y) {
        return {x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Qsqrt2 operator-() const { return {-a, -b}; }
    int sign() const;
    IntervalValue enclosure() const { return IntervalValue(a) + IntervalValue(b) * sqrt2_enclosure(); }
};

// Dense polynomial with Q[sqrt(2)] coefficients; enough structure for the
// appendix root isolation (exact evaluation and synthetic division).
struct Qsqrt2Poly {
    std::vector<Qsqrt2> c;  // c[k] * y^k
    Qsqrt2 eval(const Rational& y) const;
    IntervalValue eval_interval(const IntervalValue& y) const;
};

struct AppendixRoots {
    IntervalValue y0_P3, s0_P3;
    IntervalValue y0_P5, s0_P5;
    IntervalValue U_min;        // lower bound for U on (s0_P3, infinity); negative
    IntervalValue R3_tail_min;  // lower bound for the R3 integrand past s0_P5; negative
    bool unique_root_certified = false;  // cofactor-negativity argument passed for both
};

// Root isolation for the two appendix polynomials with exact-sign bisection,
// uniqueness via synthetic-division cofactor negativity, and the two tail
// constants with certified monotone-decrease of their bounding functions.
AppendixRoots isolate_appendix_roots();

// R3m >= sup_{t>=T} R3(t) and R4m >= sup |R4| on [T, inf), both certified.
std::pair<IntervalValue, IntervalValue> R3_R4_bounds(const Rational& T, const AppendixRoots& roots);

// Pointwise enclosures of the far-field building blocks at (t, c).
IntervalValue q0_eval(const IntervalValue& t, const IntervalValue& c);
IntervalValue q0_dc_eval(const IntervalValue& t, const IntervalValue& c);
// q0'(t) - q0(t)/(2t)
IntervalValue q0_deriv_combo_eval(const IntervalValue& t, const IntervalValue& c);
IntervalValue B_eval(const IntervalValue& t, const IntervalValue& c);
IntervalValue V_eval(const IntervalValue& t, const IntervalValue& c);

struct FarFieldParams {
    Rational T = Rational(199, 100);
    Rational c_max = Rational(1, 4);
    IntervalValue a_range, b_range, c_range;  // parameter box (used by matching)
};

FarFieldParams default_params();

struct FarFieldConstants {
    Rational T, c_max;
    IntervalValue I0T, J0T, Q2T;
    IntervalValue d0, d1, dq, dqc, dB, dBc;
    IntervalValue q0m, q0cm, q0dm, q0dcm;
    IntervalValue Bm, Bmc, Bm2t, Bm2c;
    IntervalValue Vm, Vmin, Vdm, Vcm;
    IntervalValue R3m, R4m;
    IntervalValue h0_norm, h0c_norm;
    // filled by verify_farfield_contraction / h_derived_bounds
    bool contraction_verified = false;
    IntervalValue h_norm, h_m, h_dm, h_cm;
};

FarFieldConstants compute_constants(const FarFieldParams& params, const AppendixRoots& roots);

// A bound stated in the exponentially weighted norm, kept together with the
// textual description of the weight it refers to.
struct WeightedNormBound {
    IntervalValue value;
    std::string weight_spec;
};

struct FarfieldContraction {
    bool verdict = false;
    std::string failure;
    Rational epsilon;
    IntervalValue cond1_lhs, cond1_rhs;       // paper-form record
    IntervalValue margin_lhs;                 // scale-free contraction margin vs epsilon
    IntervalValue lipschitz;                  // must be < 1
    IntervalValue h_norm_ball;                // (1+eps) ||h0||
    IntervalValue h_norm_posteriori;          // ||h0|| / (1 - Lipschitz)
    IntervalValue h_norm;                     // min of the two (certified)
    WeightedNormBound norm_bound;             // h_norm with its weight descriptor
};

// Checks the contraction inequalities for the weighted-norm integral map and
// on success stores h_norm / h_m into `constants`.
FarfieldContraction verify_farfield_contraction(FarFieldConstants& constants, const Rational& epsilon);

// |h'(T)| and |d_c h(T)| bounds; requires a verified contraction.
std::pair<IntervalValue, IntervalValue> h_derived_bounds(FarFieldConstants& constants);

struct FarfieldEBounds {
    IntervalValue coeff_E;    // |E| <= coeff * t^{-2} e^{-3t}
    IntervalValue coeff_Ep;   // |dE/dx| <= coeff * t^{-3/2} e^{-3t}
    IntervalValue coeff_Epp;  // |d2E/dx2| <= coeff * t^{-1} e^{-3t}
};

FarfieldEBounds farfield_E_bounds(const Rational& a_r, const IntervalValue& h_norm);

// Prop1ext-style scan: smallest T in `grid` for which the contraction passes
// at the given |c| bound.
std::optional<Rational> farfield_scan_T(const Rational& c_max, const std::vector<Rational>& grid,
                                        const Rational& epsilon, const AppendixRoots& roots);

}  // namespace blasius
