#include "blasius/matching.hpp"

#include <cmath>
#include <stdexcept>

namespace blasius {

const Rational& a0_center() {
    static const Rational kA0(3221, 1946);
    return kA0;
}
const Rational& b0_center() {
    static const Rational kB0(-2763, 1765);
    return kB0;
}
const Rational& c0_center() {
    static const Rational kC0(377, 1613);
    return kC0;
}

TripleEnclosure make_triple(const Rational& rho0) {
    if (rho0.sign() <= 0) throw std::invalid_argument("make_triple: rho0 must be positive");
    TripleEnclosure t;
    t.a0 = a0_center();
    t.b0 = b0_center();
    t.c0 = c0_center();
    t.rho0 = rho0;
    const Rational two_rho = Rational(2) * rho0;
    t.a = IntervalValue(t.a0 - rho0, t.a0 + rho0);
    t.b = IntervalValue(t.b0 - two_rho, t.b0 + two_rho);
    t.c = IntervalValue(t.c0 - two_rho, t.c0 + two_rho);
    return t;
}

Rational t_m_at(const Rational& a, const Rational& b) {
    const Rational u = Rational(5, 2) + b / a;
    return a / 2 * u * u;
}

IntervalValue t_m_bounds(const TripleEnclosure& triple) {
    // monotone increasing in a and in b on the box: with u = 5/2 + b/a > 0,
    // d(t_m)/da = u (5a/2 - b) / (2a) / a > 0 and d(t_m)/db = u > 0 scaled.
    const Rational al = triple.a.lo(), ar = triple.a.hi();
    const Rational bl = triple.b.lo(), br = triple.b.hi();
    if (!(al.sign() > 0 && br.sign() < 0 && Rational(5, 2) + bl / al > Rational(0)))
        throw std::domain_error("t_m_bounds: box violates monotonicity preconditions");
    const Rational lo = t_m_at(al, bl), hi = t_m_at(ar, br);
    if (!(lo < hi)) throw std::logic_error("t_m_bounds: corner ordering failed");
    return IntervalValue(lo, hi);
}

namespace {

IntervalValue weighted_norm(const IntervalValue& ra, const IntervalValue& rb, const IntervalValue& rc) {
    return sqrt_enclosure(ra * ra + rb * rb / Rational(4) + rc * rc / Rational(4));
}

struct CommonTerms {
    Rational tm0;
    IntervalValue tm0_iv, tml_iv, tmr_iv;
    Rational al, ar, bl, br, cl, cr;
    IntervalValue F0_52, F0p_52, F0pp_52;
    IntervalValue exp_tm0, exp_m_tm0, exp_m_2tm0, exp_tmr, exp_m_tml;
    IntervalValue sqrt_tm0, sqrt_tml, sqrt_tmr;
    IntervalValue phi0;  // 25/4 - b0^2/a0^2
    IntervalValue phi_box;  // 25/4 - bl^2/ar^2
};

CommonTerms common_terms(const InnerApproximant& inner, const TripleEnclosure& t) {
    CommonTerms ct;
    ct.tm0 = t_m_at(t.a0, t.b0);
    ct.tm0_iv = IntervalValue(ct.tm0);
    IntervalValue tm = t_m_bounds(t);
    ct.tml_iv = IntervalValue(tm.lo());
    ct.tmr_iv = IntervalValue(tm.hi());
    ct.al = t.a.lo();
    ct.ar = t.a.hi();
    ct.bl = t.b.lo();
    ct.br = t.b.hi();
    ct.cl = t.c.lo();
    ct.cr = t.c.hi();
    const Rational x(5, 2);
    ct.F0_52 = IntervalValue(inner.F0.eval(x));
    ct.F0p_52 = IntervalValue(inner.F0p.eval(x));
    ct.F0pp_52 = IntervalValue(inner.F0pp.eval(x));
    ct.exp_tm0 = exp_enclosure(ct.tm0_iv);
    ct.exp_m_tm0 = exp_enclosure(-ct.tm0_iv);
    ct.exp_m_2tm0 = exp_enclosure(Rational(-2) * ct.tm0_iv);
    ct.exp_tmr = exp_enclosure(ct.tmr_iv);
    ct.exp_m_tml = exp_enclosure(-ct.tml_iv);
    ct.sqrt_tm0 = sqrt_enclosure(ct.tm0_iv);
    ct.sqrt_tml = sqrt_enclosure(ct.tml_iv);
    ct.sqrt_tmr = sqrt_enclosure(ct.tmr_iv);
    const IntervalValue a0{t.a0}, b0{t.b0};
    ct.phi0 = Rational(25, 4) - b0 * b0 / (a0 * a0);
    ct.phi_box = Rational(25, 4) - IntervalValue(ct.bl * ct.bl) / IntervalValue(ct.ar * ct.ar);
    return ct;
}

}  // namespace

void residual_bound(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                    const FarFieldConstants& k, const TripleEnclosure& t, MatchCert& cert) {
    const CommonTerms ct = common_terms(inner, t);
    const IntervalValue a0{t.a0}, c0{t.c0}, b0{t.b0};
    const IntervalValue q0_tm0 = q0_eval(ct.tm0_iv, c0);
    const IntervalValue q0d_tm0 = q0_deriv_combo_eval(ct.tm0_iv, c0);
    const IntervalValue V_tm0 = V_eval(ct.tm0_iv, c0);
    const IntervalValue a032 = pow_3_2_enclosure(IntervalValue{t.a0});
    const IntervalValue hn = k.h_norm;

    // |a0 - N1|
    const IntervalValue r1_center = (a0 - ct.F0p_52 + a0 * q0d_tm0).abs();
    const IntervalValue r1_tail = a0 / Rational(3) / pow_3_2_enclosure(ct.tm0_iv) *
                                  exp_enclosure(Rational(-3) * ct.tm0_iv) * hn;
    cert.residual_a = r1_center + e52.Ep + r1_tail;

    // |b0 - N2|
    const IntervalValue r2_center =
        (b0 - ct.F0_52 + Rational(5, 2) * a0 + sqrt_enclosure(a0 / (Rational(2) * ct.tm0_iv)) * q0_tm0)
            .abs();
    const IntervalValue r2_tail = sqrt_enclosure(a0 / Rational(2)) / Rational(9) /
                                  ct.tm0_iv.pow_int(2) * exp_enclosure(Rational(-3) * ct.tm0_iv) * hn;
    cert.residual_b = r2_center + Rational(5, 2) * cert.residual_a + e52.E + r2_tail;

    // |c0 - N3|; the h-dependent factors need V - e^{-2t} ||h|| / (c0 t) > 0
    const IntervalValue guard = V_tm0 - ct.exp_m_2tm0 * hn / (c0 * ct.tm0_iv);
    if (!guard.strictly_positive())
        throw std::runtime_error("residual_bound: V(t_m) - e^{-2t_m}||h||/(c0 t_m) not positive");
    const IntervalValue r3_center =
        (c0 - Rational(1) / (sqrt2_enclosure() * a032) / V_tm0 * ct.exp_tm0 * ct.F0pp_52).abs();
    const IntervalValue r3_h = ct.F0pp_52 / (sqrt2_enclosure() * c0 * a032) / ct.tm0_iv *
                               ct.exp_m_tm0 * hn / guard / V_tm0;
    const IntervalValue r3_e = ct.exp_tm0 / (sqrt2_enclosure() * a032) * e52.Epp / guard;
    cert.residual_c = r3_center + r3_h + r3_e;

    cert.residual_norm = weighted_norm(cert.residual_a, cert.residual_b, cert.residual_c);
}

void jacobian_bound(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                    const FarFieldConstants& k, const TripleEnclosure& t, MatchCert& cert) {
    const CommonTerms ct = common_terms(inner, t);
    const IntervalValue a0{t.a0}, b0{t.b0}, c0{t.c0};
    const IntervalValue q0d_tm0 = q0_deriv_combo_eval(ct.tm0_iv, c0);
    const IntervalValue q0_tm0 = q0_eval(ct.tm0_iv, c0);
    const IntervalValue B_tm0 = B_eval(ct.tm0_iv, c0);
    const IntervalValue a032 = pow_3_2_enclosure(IntervalValue{t.a0});
    const IntervalValue al32 = pow_3_2_enclosure(IntervalValue{ct.al});

    const Rational dtm = ct.tmr_iv.lo() - ct.tm0;   // t_{m,r} - t_{m,0} >= 0
    const Rational dc = ct.cr - t.c0;               // c_r - c_0
    const Rational da = ct.ar - t.a0;               // a_r - a_0
    const IntervalValue spread_ab =
        Rational(25, 4) * IntervalValue(da) +
        (IntervalValue(ct.br * ct.br) / IntervalValue(ct.al) - b0 * b0 / a0);

    const IntervalValue Fpp_plus = ct.F0pp_52 + e52.Epp;

    // d_a N1
    const IntervalValue j11_center = (-q0d_tm0 + a0 * ct.phi0 * ct.sqrt_tm0 * B_tm0).abs();
    const IntervalValue j11 =
        j11_center + spread_ab * ct.sqrt_tmr * k.Bm +
        ct.exp_m_tml / ct.sqrt_tml * k.h_m * (Rational(1) + IntervalValue(ct.ar) / Rational(2) * ct.phi_box) +
        (Rational(2) * ct.sqrt_tmr * k.Bm +
         a0 * ct.phi0 * (k.Bm / (Rational(2) * ct.sqrt_tml) + IntervalValue(ct.cr) / (Rational(2) * ct.sqrt_tml) * k.Bm2t)) *
            IntervalValue(dtm) +
        (k.q0dcm + a0 * ct.phi0 * ct.sqrt_tmr * k.Bmc) * IntervalValue(dc);
    // d_b N1
    const IntervalValue j12 = sqrt_enclosure(IntervalValue(Rational(2) * ct.ar)) *
                              (Rational(2) * ct.tmr_iv * k.Bm + ct.exp_m_tml * k.h_m);
    // d_c N1
    const IntervalValue j13 =
        IntervalValue(ct.ar) * k.q0dcm + IntervalValue(ct.ar) * ct.exp_m_tml / ct.sqrt_tml * k.h_cm;

    // d_a N2
    const IntervalValue pref = Rational(1, 2) * inv_sqrt_enclosure(Rational(2) * IntervalValue(ct.al) * ct.tml_iv);
    const IntervalValue j21_center = pref * (q0_tm0 + a0 * ct.phi0 * q0d_tm0).abs();
    const IntervalValue j21 =
        Rational(5, 2) * j11 + j21_center + pref * spread_ab * k.q0dm +
        ct.exp_m_tml / (Rational(2) * sqrt2_enclosure() * sqrt_enclosure(IntervalValue(ct.al)) * ct.tml_iv) *
            (Rational(1) + IntervalValue(ct.ar) * ct.phi_box) * k.h_m +
        pref * (k.q0dm + k.q0m / (Rational(2) * ct.tml_iv) + a0 * ct.phi0 * Rational(2) * ct.sqrt_tmr * k.Bm) *
            IntervalValue(dtm) +
        pref * (k.q0cm + a0 * ct.phi0 * k.q0dcm) * IntervalValue(dc);
    // d_b N2
    const IntervalValue j22 =
        Rational(5, 2) * j12 + k.q0dm + ct.exp_m_tml / ct.sqrt_tml * k.h_m;
    // d_c N2
    const IntervalValue j23 = Rational(5, 2) * j13 +
                              sqrt_enclosure(IntervalValue(ct.ar) / (Rational(2) * ct.tml_iv)) * k.q0cm +
                              sqrt_enclosure(IntervalValue(ct.ar) / Rational(2)) / ct.tml_iv * k.h_cm * ct.exp_m_tml;

    // N3 rows need the positive divisor V_min - h_m / c_l
    const IntervalValue cl_iv{ct.cl};
    const IntervalValue vguard = k.Vmin - k.h_m / cl_iv;
    if (!vguard.strictly_positive())
        throw std::runtime_error("jacobian_bound: V_min - h_m/c_l not positive");
    const IntervalValue phi_box_minus = ct.phi_box - Rational(3) / IntervalValue(ct.al);
    // d_a N3
    const IntervalValue j31 =
        Rational(1) / (Rational(2) * sqrt2_enclosure() * al32) / vguard * ct.exp_tmr * Fpp_plus *
        (phi_box_minus + ct.phi_box / vguard * (k.Vdm + k.h_dm / cl_iv));
    // d_b N3
    const IntervalValue j32 = ct.sqrt_tmr / IntervalValue(ct.al * ct.al) * ct.exp_tmr * Fpp_plus /
                              (vguard * vguard) *
                              (k.Vm + k.h_m / cl_iv + k.Vdm + k.h_dm / cl_iv);
    // d_c N3
    const IntervalValue j33 = ct.exp_tmr / (sqrt2_enclosure() * al32) * Fpp_plus / (vguard * vguard) *
                              (k.Vcm + k.h_cm / cl_iv + k.h_m / (cl_iv * cl_iv));

    cert.jacobian = {{{j11, j12, j13}, {j21, j22, j23}, {j31, j32, j33}}};

    // weighted Frobenius bound, matching the metric A = (a, b/2, c/2)
    const IntervalValue sum = j11 * j11 + Rational(4) * (j12 * j12) + Rational(4) * (j13 * j13) +
                              j21 * j21 / Rational(4) + j22 * j22 + j23 * j23 +
                              j31 * j31 / Rational(4) + j32 * j32 + j33 * j33;
    cert.J_norm2 = sqrt_enclosure(sum);
    cert.alpha = cert.J_norm2;
}

std::pair<bool, std::string> lemma_match_verdict(const IntervalValue& residual_norm,
                                                 const IntervalValue& alpha, const Rational& rho0) {
    if (!(alpha.hi() < Rational(1))) return {false, "contraction: ||J||_2 < 1"};
    const IntervalValue budget = (Rational(1) - alpha) * IntervalValue(rho0);
    if (!(residual_norm.hi() <= budget.lo()))
        return {false, "fixed-point budget: ||A0 - N(A0)||_2 <= (1 - alpha) rho0"};
    return {true, ""};
}

MatchCert certify_matching(const InnerApproximant& inner, const InnerEndpointBounds& e52,
                           const FarFieldConstants& k, const TripleEnclosure& triple) {
    MatchCert cert;
    cert.rho0 = triple.rho0;
    cert.t_m_range = t_m_bounds(triple);
    residual_bound(inner, e52, k, triple, cert);
    jacobian_bound(inner, e52, k, triple, cert);
    auto [ok, why] = lemma_match_verdict(cert.residual_norm, cert.alpha, triple.rho0);
    cert.verdict = ok;
    cert.failure = why;
    return cert;
}

WallStress wall_stress(const TripleEnclosure& triple) {
    WallStress w;
    w.fpp0 = Rational(1) / pow_3_2_enclosure(triple.a);
    w.fpp0_blasius = w.fpp0 / sqrt2_enclosure();
    return w;
}

namespace {

long double ld_I0(long double t) {
    const long double pi = 3.14159265358979323846264338328L;
    return 1.0L - sqrtl(pi * t) * expl(t) * erfcl(sqrtl(t));
}

long double ld_J0(long double t) {
    const long double pi = 3.14159265358979323846264338328L;
    return 1.0L - sqrtl(2.0L * pi * t) * expl(2.0L * t) * erfcl(sqrtl(2.0L * t));
}

long double ld_q0(long double t, long double c) {
    const long double i0 = ld_I0(t), j0 = ld_J0(t);
    return 2.0L * c * sqrtl(t) * expl(-t) * i0 + c * c * expl(-2.0L * t) * (2.0L * j0 - i0 - i0 * i0);
}

long double ld_q0_deriv_combo(long double t, long double c) {
    const long double i0 = ld_I0(t);
    const long double i1 = 2.0L * t * i0;
    const long double i2 = 2.0L * t / 3.0L * (1.0L - i1);
    return -c * expl(-t) / sqrtl(t) * (1.0L - i0) -
           c * c * expl(-2.0L * t) / (4.0L * t * t) * (3.0L * i2 - 2.0L * i1 + i1 * i1 / (2.0L * t));
}

long double ld_V(long double t, long double c) {
    const long double i0 = ld_I0(t);
    const long double i1 = 2.0L * t * i0;
    const long double i2 = 2.0L * t / 3.0L * (1.0L - i1);
    return 1.0L + c * expl(-t) / (4.0L * powl(t, 1.5L)) * (3.0L * i2 - i1);
}

}  // namespace

C2Triple c2_triple(const InnerApproximant& inner, int max_iter, long double tol) {
    const long double F0_52 = inner.F0.eval_long_double(2.5L);
    const long double F0p_52 = inner.F0p.eval_long_double(2.5L);
    const long double F0pp_52 = inner.F0pp.eval_long_double(2.5L);
    long double a = a0_center().to_long_double();
    long double b = b0_center().to_long_double();
    long double c = c0_center().to_long_double();
    const long double sqrt2 = 1.41421356237309504880168872421L;
    for (int it = 1; it <= max_iter; ++it) {
        const long double u = 2.5L + b / a;
        const long double tm = a / 2.0L * u * u;
        const long double n1 = F0p_52 - a * ld_q0_deriv_combo(tm, c);
        const long double n2 = F0_52 - 2.5L * n1 - sqrtl(a / (2.0L * tm)) * ld_q0(tm, c);
        const long double n3 = expl(tm) * F0pp_52 / (sqrt2 * powl(a, 1.5L) * ld_V(tm, c));
        const long double delta =
            fabsl(n1 - a) + fabsl(n2 - b) + fabsl(n3 - c);
        a = n1;
        b = n2;
        c = n3;
        if (delta < tol) return {a, b, c, it};
    }
    throw std::runtime_error("c2_triple: no convergence within max_iter");
}

}  // namespace blasius
