#include "blasius/farfield.hpp"

#include <stdexcept>

namespace blasius {

int Qsqrt2::sign() const {
    const int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 vs 2 b^2 (value is a + b sqrt2).
    const Rational lhs = a * a, rhs = Rational(2) * b * b;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

Qsqrt2 Qsqrt2Poly::eval(const Rational& y) const {
    Qsqrt2 acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * Qsqrt2(y, Rational(0)) + *it;
    return acc;
}

IntervalValue Qsqrt2Poly::eval_interval(const IntervalValue& y) const {
    IntervalValue acc{Rational(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + it->enclosure();
    return acc;
}

namespace {

Qsqrt2Poly p3_poly() {
    // -y^3 + (17+10r)y^2 - (11+4r)y + (3+2r), r = sqrt2
    Qsqrt2Poly p;
    p.c = {Qsqrt2(Rational(3), Rational(2)), -Qsqrt2(Rational(11), Rational(4)),
           Qsqrt2(Rational(17), Rational(10)), Qsqrt2(Rational(-1), Rational(0))};
    return p;
}

Qsqrt2Poly p5_poly() {
    // 1 - (21-10r)y + (42-2r)y^2 - (42+2r)y^3 + (21+10r)y^4 - y^5
    Qsqrt2Poly p;
    p.c = {Qsqrt2(Rational(1), Rational(0)),  -Qsqrt2(Rational(21), Rational(-10)),
           Qsqrt2(Rational(42), Rational(-2)), -Qsqrt2(Rational(42), Rational(2)),
           Qsqrt2(Rational(21), Rational(10)), Qsqrt2(Rational(-1), Rational(0))};
    return p;
}

// Exact-sign bisection of a Q[sqrt2] polynomial that is positive at `lo` and
// negative at `hi`; stops when the bracket is narrower than `width`.
IntervalValue bisect_root(const Qsqrt2Poly& p, Rational lo, Rational hi, const Rational& width) {
    if (!(p.eval(lo).sign() > 0 && p.eval(hi).sign() < 0))
        throw std::runtime_error("bisect_root: bracket does not isolate a sign change");
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = p.eval(mid).sign();
        if (s == 0) {
            // exact rational root would end bisection; nudge the midpoint
            mid += (hi - lo) / 7;
            s = p.eval(mid).sign();
        }
        (s > 0 ? lo : hi) = mid;
    }
    return IntervalValue(lo, hi);
}

// Synthetic division of p by (y - y0), then recenter the quotient at y - 5.
// Returns the quotient coefficients in powers of (y-5), as intervals (y0 is
// only known as an enclosure). The remainder term is dropped: conclusions are
// drawn only for the true root, where it vanishes.
std::vector<IntervalValue> cofactor_recentered(const Qsqrt2Poly& p, const IntervalValue& y0) {
    const int n = static_cast<int>(p.c.size()) - 1;
    std::vector<IntervalValue> q(static_cast<std::size_t>(n));  // quotient degree n-1
    IntervalValue carry = p.c[static_cast<std::size_t>(n)].enclosure();
    for (int k = n - 1; k >= 0; --k) {
        q[static_cast<std::size_t>(k)] = carry;
        carry = p.c[static_cast<std::size_t>(k)].enclosure() + carry * y0;
    }
    // Taylor shift by 5: coefficients of (y-5)^j
    std::vector<IntervalValue> out(q.size(), IntervalValue(Rational(0)));
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        for (int j = static_cast<int>(q.size()) - 1; j > 0; --j)
            out[static_cast<std::size_t>(j)] =
                out[static_cast<std::size_t>(j - 1)] + out[static_cast<std::size_t>(j)] * Rational(5);
        out[0] = out[0] * Rational(5) + q[static_cast<std::size_t>(i)];
    }
    return out;
}

// Certifies that every cofactor coefficient (in powers of y-5) is negative,
// which pins the bracketed zero as the only one in (5, infinity).
bool cofactor_negative(const Qsqrt2Poly& p, const IntervalValue& y0) {
    auto coeffs = cofactor_recentered(p, y0);
    for (const auto& cv : coeffs)
        if (!cv.strictly_negative()) return false;
    return true;
}

IntervalValue s_of_y(const IntervalValue& y) {
    return Rational(-1) + (y - Rational(1)).pow_int(2) / (Rational(4) * y);
}

}  // namespace

AppendixRoots isolate_appendix_roots() {
    AppendixRoots out;
    const Rational width(1, 1000000);
    const Qsqrt2Poly p3 = p3_poly();
    const Qsqrt2Poly p5 = p5_poly();
    out.y0_P3 = bisect_root(p3, Rational(30), Rational(31), width);
    out.y0_P5 = bisect_root(p5, Rational(33), Rational(34), width);
    out.s0_P3 = s_of_y(out.y0_P3);
    out.s0_P5 = s_of_y(out.y0_P5);

    // Uniqueness beyond 3+2sqrt2 (>5): cofactor coefficients all negative.
    out.unique_root_certified = cofactor_negative(p3, out.y0_P3) && cofactor_negative(p5, out.y0_P5);

    // |P3(y)| <= y^3 for all y: P3 + y^3 is a quadratic with negative
    // discriminant and positive leading coefficient (exact check).
    {
        const Qsqrt2 qa(Rational(17), Rational(10));   // y^2
        const Qsqrt2 qb(Rational(-11), Rational(-4));  // y
        const Qsqrt2 qc(Rational(3), Rational(2));
        const Qsqrt2 disc = qb * qb - Qsqrt2(Rational(4), Rational(0)) * qa * qc;
        if (!(qa.sign() > 0 && disc.sign() < 0))
            throw std::runtime_error("appendix: |P3| <= y^3 certificate failed");
    }
    // P5 + y^5 >= 0 for y >= 2 by coefficient domination (exact check):
    // (21+10r) - (42+2r)/2 - (21-10r)/8 > 0.
    {
        const Qsqrt2 lead(Rational(21), Rational(10));
        const Qsqrt2 t3(Rational(42), Rational(2));
        const Qsqrt2 t1(Rational(21), Rational(-10));
        const Qsqrt2 margin =
            lead - t3 * Qsqrt2(Rational(1, 2), Rational(0)) - t1 * Qsqrt2(Rational(1, 8), Rational(0));
        if (margin.sign() <= 0) throw std::runtime_error("appendix: |P5| <= y^5 certificate failed");
    }
    // Monotone decrease of y^{9/2}(y-beta)/((y-1)^3 (y+1)^4) for y >= 20,
    // beta = 3+2sqrt2: the log-derivative numerator is
    // -3y^3 + (5beta+2)y^2 - (11+2beta)y + 9beta, dominated for y >= 20 by
    // (5beta+2)/20 + 9beta/8000 < 3 (exact check; the linear term only helps).
    {
        const Qsqrt2 beta(Rational(3), Rational(2));
        const Qsqrt2 c2 = Qsqrt2(Rational(2), Rational(0)) + beta * Qsqrt2(Rational(5), Rational(0));
        const Qsqrt2 c0 = beta * Qsqrt2(Rational(9), Rational(0));
        const Qsqrt2 margin = Qsqrt2(Rational(3), Rational(0)) -
                              c2 * Qsqrt2(Rational(1, 20), Rational(0)) -
                              c0 * Qsqrt2(Rational(1, 8000), Rational(0));
        if (margin.sign() <= 0) throw std::runtime_error("appendix: U-tail monotonicity certificate failed");
    }
    // Monotone decrease of y^{13/2}/((y+1)^6 (y-1)^2): numerator reduces to
    // -3y^2 + 8y - 13, negative for all y (negative leading, disc = 64-156<0).

    // U(s(y)) >= -4 y^{9/2}(3-2r)(y-beta)/((y-1)^3 (y+1)^4) at y = y0_P3:
    const IntervalValue rt2 = sqrt2_enclosure();
    const IntervalValue beta_iv = Rational(3) + Rational(2) * rt2;
    {
        const IntervalValue y = out.y0_P3;
        const IntervalValue num = Rational(4) * y.pow_int(4) * sqrt_enclosure(y) *
                                  (Rational(3) - Rational(2) * rt2) * (y - beta_iv);
        const IntervalValue den = (y - Rational(1)).pow_int(3) * (y + Rational(1)).pow_int(4);
        out.U_min = -(num / den);
    }
    // R3 integrand >= -4 y^{13/2}(2-r)/((y+1)^6 (y-1)^2) at y = y0_P5:
    {
        const IntervalValue y = out.y0_P5;
        const IntervalValue num =
            Rational(4) * y.pow_int(6) * sqrt_enclosure(y) * (Rational(2) - rt2);
        const IntervalValue den = (y + Rational(1)).pow_int(6) * (y - Rational(1)).pow_int(2);
        out.R3_tail_min = -(num / den);
    }
    if (!out.unique_root_certified)
        throw std::runtime_error("appendix: cofactor negativity failed to certify root uniqueness");
    return out;
}

std::pair<IntervalValue, IntervalValue> R3_R4_bounds(const Rational& T, const AppendixRoots& roots) {
    if (T < Rational(199, 100)) throw std::domain_error("R3_R4_bounds: requires T >= 1.99");
    const IntervalValue tT{T};
    auto [i0, j0] = I0_J0_enclosure(tT);
    const IntervalValue R3T = j0 - tT * i0 * i0 - i0 * i0;
    if (!R3T.strictly_positive())
        throw std::runtime_error("R3_R4_bounds: R3(T) not positive, sup/abs split invalid");
    // tail past s0: |integral| <= |R3_tail_min| e^{-s0 T} / T
    const IntervalValue tail =
        roots.R3_tail_min.abs() * exp_enclosure(-(roots.s0_P5 * tT)) / tT;
    const IntervalValue r3m = R3T + tail;
    const IntervalValue upper = j0 / Rational(2) - i0 / Rational(4) + i0.pow_int(3) / Rational(4);
    const IntervalValue lowerq = j0 / (Rational(4) * tT) - i0.pow_int(2) / Rational(4);
    const IntervalValue r4m(max(upper.lo(), lowerq.lo()), max(upper.hi(), lowerq.hi()));
    return {r3m, r4m};
}

IntervalValue q0_eval(const IntervalValue& t, const IntervalValue& c) {
    auto [i0, j0] = I0_J0_enclosure(t);
    const IntervalValue emt = exp_enclosure(-t);
    return Rational(2) * c * sqrt_enclosure(t) * emt * i0 +
           c * c * emt * emt * (Rational(2) * j0 - i0 - i0 * i0);
}

IntervalValue q0_dc_eval(const IntervalValue& t, const IntervalValue& c) {
    auto [i0, j0] = I0_J0_enclosure(t);
    const IntervalValue emt = exp_enclosure(-t);
    return Rational(2) * sqrt_enclosure(t) * emt * i0 +
           Rational(2) * c * emt * emt * (Rational(2) * j0 - i0 - i0 * i0);
}

IntervalValue q0_deriv_combo_eval(const IntervalValue& t, const IntervalValue& c) {
    auto [i0, j0] = I0_J0_enclosure(t);
    (void)j0;
    const IntervalValue i1 = Rational(2) * t * i0;
    const IntervalValue i2 = I2_enclosure(t, i0);
    const IntervalValue emt = exp_enclosure(-t);
    const IntervalValue t2 = t * t;
    return -(c * emt * inv_sqrt_enclosure(t)) * (Rational(1) - i0) -
           (c * c * emt * emt / (Rational(4) * t2)) *
               (Rational(3) * i2 - Rational(2) * i1 + i1 * i1 / (Rational(2) * t));
}

IntervalValue B_eval(const IntervalValue& t, const IntervalValue& c) {
    auto [i0, j0] = I0_J0_enclosure(t);
    (void)j0;
    const IntervalValue i1 = Rational(2) * t * i0;
    const IntervalValue i2 = I2_enclosure(t, i0);
    const IntervalValue emt = exp_enclosure(-t);
    return -(c * emt / (Rational(2) * t)) -
           (c * c * emt * emt / (Rational(8) * pow_3_2_enclosure(t) * t)) * (Rational(3) * i2 - i1);
}

IntervalValue V_eval(const IntervalValue& t, const IntervalValue& c) {
    auto [i0, j0] = I0_J0_enclosure(t);
    (void)j0;
    const IntervalValue i1 = Rational(2) * t * i0;
    const IntervalValue i2 = I2_enclosure(t, i0);
    return Rational(1) +
           (c * exp_enclosure(-t) / (Rational(4) * pow_3_2_enclosure(t))) * (Rational(3) * i2 - i1);
}

FarFieldParams default_params() {
    FarFieldParams p;
    p.a_range = IntervalValue(Rational(0), Rational(2));
    p.b_range = IntervalValue(Rational(-2), Rational(0));
    p.c_range = IntervalValue(-p.c_max, p.c_max);
    return p;
}

FarFieldConstants compute_constants(const FarFieldParams& params, const AppendixRoots& roots) {
    if (params.T < Rational(199, 100)) throw std::domain_error("compute_constants: requires T >= 1.99");
    FarFieldConstants k;
    k.T = params.T;
    k.c_max = params.c_max;
    const IntervalValue T{params.T};
    const IntervalValue c{params.c_max};
    auto [i0, j0] = I0_J0_enclosure(T);
    k.I0T = i0;
    k.J0T = j0;
    k.Q2T = T * (Rational(2) * j0 - i0 - i0 * i0);
    if (!k.Q2T.strictly_positive()) throw std::runtime_error("compute_constants: Q2(T) not positive");

    const IntervalValue emT = exp_enclosure(-T);
    const IntervalValue sqT = sqrt_enclosure(T);
    const IntervalValue T32 = pow_3_2_enclosure(T);
    std::tie(k.R3m, k.R4m) = R3_R4_bounds(params.T, roots);

    k.d0 = emT / sqT * (k.Q2T + roots.U_min.abs() * exp_enclosure(-(roots.s0_P3 * T)));
    k.d1 = Rational(3) * emT / (Rational(4) * T32);
    k.dq = c / Rational(4) / T32 * (Rational(1) + c * k.d0);
    k.dqc = Rational(1, 4) / T32 * (Rational(1) + Rational(2) * c * k.d0);
    k.dB = c * emT / (Rational(54) * T32) * (Rational(1) + c * k.d1);
    k.dBc = emT / (Rational(54) * T32) * (Rational(1) + Rational(2) * c * k.d1);

    k.q0m = c * emT / sqT * (Rational(1) + k.d0 * c);
    k.q0cm = emT / sqT * (Rational(1) + Rational(2) * k.d0 * c);
    k.q0dm = c * emT / sqT * (Rational(1) + Rational(3) * c * emT / (Rational(4) * T32));
    k.q0dcm = emT / sqT * (Rational(1) + Rational(3) * c * emT / (Rational(2) * T32));

    k.Bm = c * emT / (Rational(2) * T) * (Rational(1) + Rational(3) * c * emT / (Rational(4) * T32));
    k.Bmc = emT / (Rational(2) * T) * (Rational(1) + Rational(3) * c * emT / (Rational(2) * T32));
    k.Bm2t = emT * (Rational(1) + c * emT / T32);
    k.Bm2c = Rational(3) * emT * emT / (Rational(4) * T32);

    k.Vm = Rational(1) + Rational(3) * c * emT / (Rational(4) * T32);
    k.Vmin = Rational(1) - c * emT / (Rational(4) * T32);
    if (!k.Vmin.strictly_positive()) throw std::runtime_error("compute_constants: Vmin not positive");
    k.Vdm = c * emT / (Rational(2) * T32);
    k.Vcm = emT / (Rational(4) * T32);

    k.h0_norm = c.pow_int(3) * (k.R3m / Rational(2) + c * emT / (Rational(3) * sqT) * k.R4m);
    k.h0c_norm =
        c.pow_int(2) * (Rational(3, 2) * k.R3m + Rational(4) * c * emT / (Rational(3) * sqT) * k.R4m);
    return k;
}

FarfieldContraction verify_farfield_contraction(FarFieldConstants& k, const Rational& epsilon) {
    FarfieldContraction r;
    r.epsilon = epsilon;
    const IntervalValue T{k.T};
    const IntervalValue one_eps{Rational(1) + epsilon};
    const IntervalValue kappa =
        exp_enclosure(Rational(-3) * T) / (Rational(90) * T.pow_int(2) * sqrt_enclosure(T));
    const IntervalValue H = k.h0_norm;

    r.cond1_lhs = H + (k.dq + k.dB) * one_eps * H + kappa * one_eps * one_eps * H * H;
    r.cond1_rhs = one_eps * H;
    // scale-free form of the same inequality (valid uniformly in ||h0||):
    r.margin_lhs = (k.dq + k.dB) * one_eps + kappa * one_eps * one_eps * H;
    r.lipschitz = k.dq + k.dB + Rational(2) * kappa * one_eps * H;

    if (!(r.margin_lhs.hi() <= epsilon)) {
        r.failure = "ball invariance: (dq+dB)(1+eps) + kappa (1+eps)^2 ||h0|| <= eps";
        return r;
    }
    if (!(r.lipschitz.hi() < Rational(1))) {
        r.failure = "Lipschitz constant: dq + dB + 2 kappa (1+eps) ||h0|| < 1";
        return r;
    }
    r.verdict = true;
    r.h_norm_ball = one_eps * H;
    // A-posteriori sharpening: the fixed point h satisfies
    // ||h|| <= ||h0|| + L ||h|| with the Lipschitz constant above, hence
    // ||h|| <= ||h0|| / (1 - L).
    r.h_norm_posteriori = H / (Rational(1) - r.lipschitz);
    r.h_norm = (r.h_norm_posteriori.hi() <= r.h_norm_ball.hi()) ? r.h_norm_posteriori : r.h_norm_ball;
    r.norm_bound = {r.h_norm, "sup_{t>=T} t e^{2t} |.|"};
    k.contraction_verified = true;
    k.h_norm = r.h_norm;
    k.h_m = k.h_norm * exp_enclosure(Rational(-2) * T) / T;
    return r;
}

std::pair<IntervalValue, IntervalValue> h_derived_bounds(FarFieldConstants& k) {
    if (!k.contraction_verified)
        throw std::logic_error("h_derived_bounds: contraction must be verified first");
    const IntervalValue T{k.T};
    const IntervalValue emT = exp_enclosure(-T);
    const IntervalValue em2T = exp_enclosure(Rational(-2) * T);
    const IntervalValue em3T = exp_enclosure(Rational(-3) * T);
    const IntervalValue sqT = sqrt_enclosure(T);
    const IntervalValue T52 = T.pow_int(2) * sqrt_enclosure(T);
    const IntervalValue c{k.c_max};
    const IntervalValue weight = em2T / T;

    const IntervalValue hd =
        weight * (Rational(2) * k.dq * k.h_norm + k.Bm / Rational(9) * k.h_norm +
                  em3T / (Rational(18) * T52) * k.h_norm * k.h_norm +
                  c.pow_int(3) * (k.R3m + c * emT / sqT * k.R4m));
    const IntervalValue denom =
        Rational(1) - k.dq - k.dB - em3T / (Rational(45) * T52) * k.h_norm;
    if (!denom.strictly_positive())
        throw std::runtime_error("h_derived_bounds: 1 - dq - dB - kappa ||h|| not positive");
    const IntervalValue hc = weight / denom * (k.h0c_norm + (k.dqc + k.dBc) * k.h_norm);
    k.h_dm = hd;
    k.h_cm = hc;
    return {hd, hc};
}

FarfieldEBounds farfield_E_bounds(const Rational& a_r, const IntervalValue& h_norm) {
    FarfieldEBounds e;
    const IntervalValue ar{a_r};
    e.coeff_E = sqrt_enclosure(ar / Rational(2)) * h_norm / Rational(9);
    e.coeff_Ep = ar / Rational(3) * h_norm;
    e.coeff_Epp = sqrt2_enclosure() * pow_3_2_enclosure(ar) * h_norm;
    return e;
}

std::optional<Rational> farfield_scan_T(const Rational& c_max, const std::vector<Rational>& grid,
                                        const Rational& epsilon, const AppendixRoots& roots) {
    for (const auto& T : grid) {
        FarFieldParams p;
        p.T = T;
        p.c_max = c_max;
        try {
            FarFieldConstants k = compute_constants(p, roots);
            FarfieldContraction r = verify_farfield_contraction(k, epsilon);
            if (r.verdict) return T;
        } catch (const std::exception&) {
            // T too small for this c; keep scanning
        }
    }
    return std::nullopt;
}

}  // namespace blasius
