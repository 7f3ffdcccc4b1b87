#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "blasius/certificate.hpp"
#include "blasius/matching.hpp"
#include "blasius/oracle.hpp"
#include "blasius/special.hpp"

namespace py = pybind11;
using namespace blasius;

namespace {

Config config_from_kwargs(const std::string& T, const std::string& c_max, const std::string& rho0,
                          const std::vector<std::string>& eps_inner, int digits) {
    Config cfg;
    apply_env_defaults(cfg);
    if (!T.empty()) cfg.T = Rational::parse(T);
    if (!c_max.empty()) cfg.c_max = Rational::parse(c_max);
    if (!rho0.empty()) cfg.rho0 = Rational::parse(rho0);
    if (!eps_inner.empty()) {
        cfg.eps_inner.clear();
        for (const auto& e : eps_inner) cfg.eps_inner.push_back(Rational::parse(e));
    }
    if (digits > 0) cfg.digits = digits;
    return cfg;
}

std::string certify_json(const std::string& T, const std::string& c_max, const std::string& rho0,
                         const std::vector<std::string>& eps_inner, int digits) {
    const Config cfg = config_from_kwargs(T, c_max, rho0, eps_inner, digits);
    return certificate_to_json(run_certificate(cfg)).dump();
}

std::pair<std::string, std::string> erfc_bounds(const std::string& x, int digits) {
    IntervalValue r = erfc_enclosure(IntervalValue(Rational::parse(x)));
    return {r.lo().to_decimal_string(digits, -1), r.hi().to_decimal_string(digits, +1)};
}

std::pair<std::string, std::string> range_bound_py(const std::vector<std::string>& coeffs,
                                                   const std::string& xl, const std::string& xr,
                                                   int digits) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rational::parse(s));
    IntervalValue r = range_bound(RationalPoly(std::move(c)), Rational::parse(xl), Rational::parse(xr));
    return {r.lo().to_decimal_string(digits, -1), r.hi().to_decimal_string(digits, +1)};
}

py::dict eval_point(const std::string& x, const std::string& which, const std::string& form) {
    const Rational xr = Rational::parse(x);
    if (xr.sign() < 0) throw py::value_error("x must be nonnegative");
    const int order = which == "F" ? 0 : which == "F'" ? 1 : which == "F''" ? 2 : -1;
    if (order < 0) throw py::value_error("which must be F, F' or F''");
    static const InnerApproximant inner = build_inner();
    py::dict out;
    const bool use_inner = form == "inner" || (form != "farfield" && xr <= Rational(5, 2));
    if (use_inner) {
        if (xr > Rational(5, 2)) throw py::value_error("inner form is only meaningful for x <= 5/2");
        const RationalPoly& p = order == 0 ? inner.F0 : order == 1 ? inner.F0p : inner.F0pp;
        static const double kBound[3] = {4e-6, 4.5e-6, 3.5e-6};
        out["value"] = p.eval(xr).to_double();
        out["value_exact"] = p.eval(xr).to_fraction_string();
        out["error_bound"] = kBound[order];
        out["form"] = "inner";
        return out;
    }
    if (xr < Rational(5, 2)) throw py::value_error("farfield form needs x >= 5/2");
    static const C2Triple t = c2_triple(inner, 300, 1e-17L);
    const long double xf = xr.to_long_double();
    const long double tm = t.a / 2 * (xf + t.b / t.a) * (xf + t.b / t.a);
    const long double e3t = expl(-3.0L * tm);
    long double val = 0, err = 0;
    if (order == 0) {
        val = t.a * xf + t.b + sqrtl(t.a / (2 * tm)) * oracle_q0(tm, t.c);
        err = 1.69e-5L / (tm * tm) * e3t;
    } else if (order == 1) {
        const long double h = 1e-6L;
        auto g = [&](long double xx) {
            const long double tt = t.a / 2 * (xx + t.b / t.a) * (xx + t.b / t.a);
            return t.a * xx + t.b + sqrtl(t.a / (2 * tt)) * oracle_q0(tt, t.c);
        };
        val = (g(xf + h) - g(xf - h)) / (2 * h);
        err = 9.20e-5L * powl(tm, -1.5L) * e3t;
    } else {
        const long double h = 1e-5L;
        auto g = [&](long double xx) {
            const long double tt = t.a / 2 * (xx + t.b / t.a) * (xx + t.b / t.a);
            return t.a * xx + t.b + sqrtl(t.a / (2 * tt)) * oracle_q0(tt, t.c);
        };
        val = (g(xf + h) - 2 * g(xf) + g(xf - h)) / (h * h);
        err = 5.02e-4L / tm * e3t;
    }
    out["value"] = static_cast<double>(val);
    out["error_bound"] = static_cast<double>(err);
    out["form"] = "farfield";
    return out;
}

py::dict shooting(double tol) {
    OracleSolution sol = solve_ivp(20.0L, static_cast<long double>(tol), {});
    extract_abc(sol);
    py::dict out;
    out["a"] = static_cast<double>(sol.a_est);
    out["b"] = static_cast<double>(sol.b_est);
    out["c"] = static_cast<double>(sol.c_est);
    out["fpp0"] = std::pow(static_cast<double>(sol.a_est), -1.5);
    out["precision_estimate"] = static_cast<double>(sol.precision_estimate);
    return out;
}

py::tuple c2_triple_py() {
    static const InnerApproximant inner = build_inner();
    const C2Triple t = c2_triple(inner, 300, 1e-17L);
    return py::make_tuple(static_cast<double>(t.a), static_cast<double>(t.b),
                          static_cast<double>(t.c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "validated enclosures for the Blasius boundary-layer profile";
    m.def("certify_json", &certify_json, py::arg("T") = "", py::arg("c_max") = "",
          py::arg("rho0") = "", py::arg("eps_inner") = std::vector<std::string>{},
          py::arg("digits") = 0,
          "run the full certificate pipeline; returns the certificate as a JSON string");
    m.def("erfc_enclosure", &erfc_bounds, py::arg("x"), py::arg("digits") = 25,
          "certified lower/upper decimal bounds for erfc(x), x >= 1");
    m.def("range_bound", &range_bound_py, py::arg("coeffs"), py::arg("xl"), py::arg("xr"),
          py::arg("digits") = 20,
          "certified range of a rational-coefficient polynomial over [xl, xr]");
    m.def("eval_point", &eval_point, py::arg("x"), py::arg("which") = "F", py::arg("form") = "auto",
          "evaluate the closed-form approximant with its certified error bound");
    m.def("shooting", &shooting, py::arg("tol") = 1e-18,
          "non-rigorous shooting solution of the normalized problem");
    m.def("c2_triple", &c2_triple_py, "parameters making the two-piece form C2 at 5/2");
    m.attr("__version__") = "0.1.0";
}
