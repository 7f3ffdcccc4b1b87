#include "blasius/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blasius {

namespace {

struct State {
    long double F, Fp, Fpp;
};

inline State rhs(const State& y) { return {y.Fp, y.Fpp, -y.F * y.Fpp}; }

inline State rk4_step(const State& y, long double h) {
    const State k1 = rhs(y);
    const State y2{y.F + h / 2 * k1.F, y.Fp + h / 2 * k1.Fp, y.Fpp + h / 2 * k1.Fpp};
    const State k2 = rhs(y2);
    const State y3{y.F + h / 2 * k2.F, y.Fp + h / 2 * k2.Fp, y.Fpp + h / 2 * k2.Fpp};
    const State k3 = rhs(y3);
    const State y4{y.F + h * k3.F, y.Fp + h * k3.Fp, y.Fpp + h * k3.Fpp};
    const State k4 = rhs(y4);
    return {y.F + h / 6 * (k1.F + 2 * k2.F + 2 * k3.F + k4.F),
            y.Fp + h / 6 * (k1.Fp + 2 * k2.Fp + 2 * k3.Fp + k4.Fp),
            y.Fpp + h / 6 * (k1.Fpp + 2 * k2.Fpp + 2 * k3.Fpp + k4.Fpp)};
}

}  // namespace

long double oracle_I0(long double t) {
    const long double pi = 3.14159265358979323846264338328L;
    return 1.0L - sqrtl(pi * t) * expl(t) * erfcl(sqrtl(t));
}

long double oracle_J0(long double t) {
    const long double pi = 3.14159265358979323846264338328L;
    return 1.0L - sqrtl(2.0L * pi * t) * expl(2.0L * t) * erfcl(sqrtl(2.0L * t));
}

long double oracle_q0(long double t, long double c) {
    const long double i0 = oracle_I0(t), j0 = oracle_J0(t);
    return 2.0L * c * sqrtl(t) * expl(-t) * i0 + c * c * expl(-2.0L * t) * (2.0L * j0 - i0 - i0 * i0);
}

OracleSolution solve_ivp(long double x_max, long double tol,
                         const std::vector<long double>& outputs) {
    if (!(tol >= 1e-30L && tol <= 1e-8L)) throw std::domain_error("solve_ivp: tol outside [1e-30, 1e-8]");
    if (!(x_max > 0)) throw std::domain_error("solve_ivp: x_max must be positive");
    OracleSolution sol;
    sol.x_max = x_max;
    sol.tol = static_cast<long double>(tol);
    // 80-bit arithmetic floors the achievable per-step error
    const long double eps = 1.084e-19L;
    sol.tol_effective = std::max(sol.tol, 32 * eps);

    std::vector<long double> stops = outputs;
    stops.push_back(x_max);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    State y{0.0L, 0.0L, 1.0L};
    long double x = 0.0L;
    long double h = 1e-3L;
    long double accum_err = 0.0L;
    sol.trace.push_back({x, y.F, y.Fp, y.Fpp});
    std::size_t next_stop = 0;
    while (next_stop < stops.size() && stops[next_stop] <= 0) {
        sol.samples.push_back({0.0L, y.F, y.Fp, y.Fpp});
        ++next_stop;
    }
    int safety = 0;
    while (x < x_max) {
        if (++safety > 40000000) throw std::runtime_error("solve_ivp: step-size underflow");
        const long double target = stops[next_stop];
        bool clipped = false;
        long double hh = h;
        if (x + hh >= target) {
            hh = target - x;
            clipped = true;
        }
        const State full = rk4_step(y, hh);
        const State half1 = rk4_step(y, hh / 2);
        State mid = half1;
        const State half2 = rk4_step(mid, hh / 2);
        const long double scale = std::max({fabsl(y.F), fabsl(y.Fp), fabsl(y.Fpp), 1.0L});
        const long double err = std::max({fabsl(half2.F - full.F), fabsl(half2.Fp - full.Fp),
                                          fabsl(half2.Fpp - full.Fpp)}) /
                                15.0L;
        if (err > sol.tol_effective * scale && hh > 1e-12L) {
            h = hh * std::max(0.25L, 0.9L * powl(sol.tol_effective * scale / err, 0.2L));
            continue;
        }
        // accept with local extrapolation
        y = {half2.F + (half2.F - full.F) / 15.0L, half2.Fp + (half2.Fp - full.Fp) / 15.0L,
             half2.Fpp + (half2.Fpp - full.Fpp) / 15.0L};
        x = clipped ? target : x + hh;
        accum_err += err;
        sol.trace.push_back({x, y.F, y.Fp, y.Fpp});
        if (clipped) {
            sol.samples.push_back({x, y.F, y.Fp, y.Fpp});
            ++next_stop;
            if (next_stop >= stops.size()) break;
        }
        if (err > 0)
            h = std::min(hh * std::min(4.0L, 0.9L * powl(sol.tol_effective * scale / err, 0.2L)),
                         0.25L);
        else
            h = std::min(hh * 4.0L, 0.25L);
    }
    sol.precision_estimate = std::max(accum_err, eps * 16);
    return sol;
}

void extract_abc(OracleSolution& sol) {
    if (sol.x_max < 15.0L) throw std::domain_error("extract_abc: needs x_max >= 15");
    const OracleSample& fin = sol.samples.back();
    sol.a_est = fin.Fp;
    sol.b_est = fin.F - sol.a_est * fin.x;

    // Invert q = xi Q1 + xi^2 Q2 at mid-range points where F - a x - b is
    // still well above the integration noise floor (t <= ~17).
    const long double a = sol.a_est, b = sol.b_est;
    std::vector<long double> cs;
    for (const auto& s : sol.trace) {
        if (s.x < 4.5L || s.x > 5.5L) continue;
        const long double t = a / 2 * (s.x + b / a) * (s.x + b / a);
        const long double w = (s.F - a * s.x - b) / sqrtl(a / (2 * t));
        const long double i0 = oracle_I0(t), j0 = oracle_J0(t);
        const long double Q1 = 2 * t * i0;
        const long double Q2 = t * (2 * j0 - i0 - i0 * i0);
        const long double disc = Q1 * Q1 + 4 * Q2 * w;
        if (disc <= 0) continue;
        const long double xi = 2 * w / (Q1 + sqrtl(disc));
        cs.push_back(xi * sqrtl(t) * expl(t));
    }
    if (cs.size() < 3) throw std::runtime_error("extract_abc: too few usable sample points");
    long double cmin = cs[0], cmax = cs[0], csum = 0;
    for (long double c : cs) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        csum += c;
    }
    if (cmax - cmin > 1e-6L) throw std::runtime_error("extract_abc: inconsistent c estimates");
    sol.c_est = csum / static_cast<long double>(cs.size());
}

InnerComparison compare_inner(const InnerApproximant& inner, int n_samples, long double tol) {
    if (n_samples < 2) throw std::invalid_argument("compare_inner: need at least 2 samples");
    std::vector<long double> xs;
    xs.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i)
        xs.push_back(2.5L * static_cast<long double>(i) / static_cast<long double>(n_samples - 1));
    OracleSolution sol = solve_ivp(2.5L, tol, xs);
    InnerComparison cmp;
    cmp.n_samples = n_samples;
    for (const auto& s : sol.samples) {
        const long double x = s.x;
        cmp.max_dF = std::max(cmp.max_dF, fabsl(s.F - inner.F0.eval_long_double(x)));
        cmp.max_dFp = std::max(cmp.max_dFp, fabsl(s.Fp - inner.F0p.eval_long_double(x)));
        cmp.max_dFpp = std::max(cmp.max_dFpp, fabsl(s.Fpp - inner.F0pp.eval_long_double(x)));
    }
    return cmp;
}

}  // namespace blasius
