#include "blasius/certificate.hpp"

#include <chrono>

#include "blasius/contraction.hpp"
#include "blasius/farfield.hpp"
#include "blasius/inner.hpp"
#include "blasius/matching.hpp"

namespace blasius {

namespace {

using njson = nlohmann::ordered_json;

IntervalValue band(const char* lo, const char* hi) {
    return IntervalValue(Rational::parse(lo), Rational::parse(hi));
}

IntervalValue upper_band(const char* hi) { return band("0", hi); }

void add_value(CertificateSection& s, const std::string& name, const IntervalValue& v,
               const std::string& note = "") {
    s.items.push_back({name, v, std::nullopt, true, note});
}

void add_contained(CertificateSection& s, const std::string& name, const IntervalValue& v,
                   const IntervalValue& b, const std::string& note = "") {
    const bool ok = b.contains(v);
    s.items.push_back({name, v, b, ok, note});
    if (!ok) {
        s.verdict = false;
        if (s.failure.empty()) s.failure = name + " outside reference band";
    }
}

void add_upper(CertificateSection& s, const std::string& name, const IntervalValue& v,
               const char* bound, const std::string& note = "") {
    add_contained(s, name, v, upper_band(bound), note);
}

void add_check(CertificateSection& s, const std::string& name, bool ok, const IntervalValue& v,
               const std::string& note = "") {
    s.items.push_back({name, v, std::nullopt, ok, note});
    if (!ok) {
        s.verdict = false;
        if (s.failure.empty()) s.failure = name;
    }
}

}  // namespace

Certificate run_certificate(const Config& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.version = "0.1.0";
    cert.config = cfg;
    const bool default_rho = (cfg.rho0 == Rational(5, 100000));

    const InnerApproximant inner = build_inner();
    Partition part = paper_partition();
    if (cfg.partition) part.breakpoints = *cfg.partition;

    // ---- inner remainder ----
    RemainderBounds rem;
    {
        CertificateSection s{"inner-remainder"};
        rem = bound_remainder(inner, part);
        for (const auto& cell : rem.per_cell)
            add_value(s, "R-range[" + cell.xl.to_decimal_string(7, -1) + "," +
                             cell.xr.to_decimal_string(7, 1) + "]",
                      cell.range);
        add_contained(s, "R-union-left", rem.on_left, band("-3.22e-7", "2.505e-7"));
        add_contained(s, "R-union-middle", rem.on_middle, band("4.6e-8", "4.06e-7"));
        add_contained(s, "R-union-right", rem.on_right, band("2.78e-7", "6.73e-7"));
        add_upper(s, "R-sup-global", IntervalValue(rem.sup_global), "6.73e-7");
        cert.sections.push_back(std::move(s));
    }

    // ---- F0 bands ----
    {
        CertificateSection s{"F0-bands"};
        const F0FamilyBounds fam = bound_F0_family(inner);
        add_contained(s, "F0-on-[0,1/8]", fam.F0_head, band("-5e-10", "0.008"));
        add_contained(s, "F0p-on-[0,1/8]", fam.F0p_head, band("-8e-12", "0.13"));
        add_contained(s, "F0pp-on-[0,1/8]", fam.F0pp_head, band("0.99", "1.000000002"));
        add_contained(s, "F0-on-[1/8,5/2]", fam.F0_main, band("0.0078", "2.59"),
                      "exact minimum 1/128 + O(x^4) sits below the classical 0.03 constant");
        add_contained(s, "F0-on-[1/4,5/2]", fam.F0_quarter, band("0.03", "2.59"));
        add_contained(s, "F0p-on-[1/8,5/2]", fam.F0p_main, band("0.12", "1.7"));
        add_contained(s, "F0pp-on-[1/8,5/2]", fam.F0pp_main, band("0.09", "1"));
        add_value(s, "refine-depth", IntervalValue(Rational(fam.refine_depth)));
        cert.sections.push_back(std::move(s));
    }

    // ---- sign changes ----
    std::vector<SignChangeBracket> brackets;
    {
        CertificateSection s{"sign-changes"};
        try {
            brackets = localize_sign_changes(inner, part, rem);
            for (const auto& b : brackets) {
                add_check(s, to_string(b.expr) + "-bracket",
                          b.value_lo.sign() > 0 && b.value_hi.sign() < 0, IntervalValue(b.lo, b.hi));
                add_check(s, to_string(b.expr) + "-monotone", b.monotone_certified,
                          IntervalValue(Rational(b.monotone_certified ? 1 : 0)));
                add_check(s, to_string(b.expr) + "-head-positive", b.positive_on_head,
                          IntervalValue(Rational(b.positive_on_head ? 1 : 0)));
            }
        } catch (const std::exception& ex) {
            s.verdict = false;
            s.failure = ex.what();
        }
        cert.sections.push_back(std::move(s));
    }

    // ---- energy + inner contraction chain ----
    InnerPipelineResult pipe;
    bool pipe_ok = false;
    if (!brackets.empty()) {
        const std::vector<Rational> chain = {Rational(0), x_c(), Rational(2), Rational(5, 2)};
        pipe = run_inner_pipeline(inner, part, rem, brackets, chain, cfg.eps_inner);
        pipe_ok = pipe.verdict;

        static const char* kM1Bands[3] = {nullptr, "0.572", "0.3"};
        static const char* kM2Bands[3] = {nullptr, "0.199", "0.0744"};
        static const char* kM3Bands[3] = {nullptr, "1.01", "1.01"};
        static const char* kMBands[3] = {"3.03", "0.825", "0.708"};
        static const char* kB0Bands[3] = {"0.9757e-6", "2.0653e-6", "3.431e-6"};
        static const char* kEppBands[3] = {"0.976e-6", "2.07e-6", "3.44e-6"};
        static const char* kEpBands[3] = {"1.29e-6", "2.7e-6", "4.42e-6"};
        static const char* kEBands[3] = {"0.853e-6", "2.21e-6", "3.99e-6"};

        for (std::size_t i = 0; i < pipe.certs.size() && i < 3; ++i) {
            const auto& c = pipe.certs[i];
            CertificateSection s{"energy-" + c.interval_id};
            if (kM1Bands[i])
                add_upper(s, "M1", c.energy.M1, kM1Bands[i]);
            else
                add_value(s, "M1", c.energy.M1);
            if (kM2Bands[i])
                add_upper(s, "M2", c.energy.M2, kM2Bands[i]);
            else
                add_value(s, "M2", c.energy.M2);
            if (kM3Bands[i])
                add_upper(s, "M3", c.energy.M3, kM3Bands[i]);
            else
                add_value(s, "M3", c.energy.M3);
            add_upper(s, "M", c.energy.M, kMBands[i]);
            add_value(s, "refine-depth", IntervalValue(Rational(c.energy.refine_depth)));
            cert.sections.push_back(std::move(s));
        }
        for (std::size_t i = 0; i < pipe.certs.size() && i < 3; ++i) {
            const auto& c = pipe.certs[i];
            CertificateSection s{"contraction-" + c.interval_id};
            add_value(s, "R-sup", c.R_sup);
            add_upper(s, "B0", c.B0, kB0Bands[i]);
            add_value(s, "epsilon", IntervalValue(c.epsilon));
            add_check(s, "cond1 < eps", c.cond1_lhs.hi() < c.epsilon, c.cond1_lhs);
            add_check(s, "cond2 < 1", c.cond2_lhs.hi() < Rational(1), c.cond2_lhs);
            if (c.verdict) {
                add_upper(s, "Epp-sup", c.Epp_bound, kEppBands[i]);
                add_upper(s, "Ep-sup", c.Ep_bound, kEpBands[i]);
                add_upper(s, "E-sup", c.E_bound, kEBands[i]);
                add_value(s, "Eppp-sup", c.Eppp_bound);
            } else {
                s.verdict = false;
                s.failure = c.failure;
            }
            cert.sections.push_back(std::move(s));
        }
        {
            CertificateSection s{"contraction-global"};
            if (pipe_ok) {
                add_upper(s, "Epp-global", pipe.global_Epp, "3.5e-6");
                add_upper(s, "Ep-global", pipe.global_Ep, "4.5e-6");
                add_upper(s, "E-global", pipe.global_E, "4e-6");
            } else {
                s.verdict = false;
                s.failure = "inner contraction chain failed";
            }
            cert.sections.push_back(std::move(s));
        }
    }

    // ---- appendix roots (reference values pinned at T = 1.99) ----
    AppendixRoots roots;
    bool roots_ok = false;
    {
        CertificateSection s{"appendix-roots"};
        try {
            roots = isolate_appendix_roots();
            roots_ok = true;
            add_contained(s, "P3-y0", roots.y0_P3, band("30.60", "30.61"));
            add_contained(s, "P3-s0", roots.s0_P3, band("6.159", "6.160"));
            add_contained(s, "P5-y0", roots.y0_P5, band("33.851", "33.852"));
            add_contained(s, "P5-s0", roots.s0_P5, band("6.9701", "6.9704"));
            add_check(s, "cofactor-negativity", roots.unique_root_certified,
                      IntervalValue(Rational(1)));
            add_contained(s, "U-tail-min", roots.U_min, band("-0.0944", "0"));
            add_contained(s, "R3-tail-min", roots.R3_tail_min, band("-0.0107", "0"));
            const Rational Tref(199, 100);
            auto [r3m, r4m] = R3_R4_bounds(Tref, roots);
            add_upper(s, "R3m(1.99)", r3m, "0.02057");
            add_upper(s, "R4m(1.99)", r4m, "0.009042");
            add_contained(s, "Q2(1.99)", Q2_enclosure(IntervalValue(Tref)), band("0.0142", "0.0152"),
                          "reference 0.0147 with +-5e-4 tolerance");
        } catch (const std::exception& ex) {
            s.verdict = false;
            s.failure = ex.what();
        }
        cert.sections.push_back(std::move(s));
    }

    // ---- far field at the configured (T, c_max) ----
    FarFieldConstants kff;
    bool ff_ok = false;
    {
        CertificateSection s{"farfield-constants"};
        try {
            FarFieldParams pf;
            pf.T = cfg.T;
            pf.c_max = cfg.c_max;
            kff = compute_constants(pf, roots);
            add_value(s, "Q2(T)", kff.Q2T);
            add_value(s, "d0", kff.d0);
            add_value(s, "dq", kff.dq);
            add_value(s, "dB", kff.dB);
            add_value(s, "R3m", kff.R3m);
            add_value(s, "R4m", kff.R4m);
            add_value(s, "h0-norm", kff.h0_norm);
            add_check(s, "Vmin-positive", kff.Vmin.strictly_positive(), kff.Vmin);
            ff_ok = roots_ok;
        } catch (const std::exception& ex) {
            s.verdict = false;
            s.failure = ex.what();
        }
        cert.sections.push_back(std::move(s));
    }
    {
        CertificateSection s{"farfield-contraction"};
        if (ff_ok) {
            FarfieldContraction fc = verify_farfield_contraction(kff, Rational(3, 100));
            add_value(s, "contraction-margin", fc.margin_lhs);
            add_value(s, "lipschitz", fc.lipschitz);
            add_check(s, "verdict", fc.verdict, IntervalValue(Rational(fc.verdict ? 1 : 0)),
                      fc.failure);
            if (fc.verdict) {
                add_value(s, "h-norm-ball", fc.h_norm_ball);
                add_value(s, "h-norm-posteriori", fc.h_norm_posteriori);
                add_upper(s, "h-norm", fc.h_norm, "1.6667e-4");
                add_upper(s, "h-m", kff.h_m, "1.5651e-6");
                auto [hdm, hcm] = h_derived_bounds(kff);
                add_value(s, "h-dm", hdm);
                add_value(s, "h-cm", hcm);
                const FarfieldEBounds eb = farfield_E_bounds(a0_center() + cfg.rho0, kff.h_norm);
                add_upper(s, "E-coeff", eb.coeff_E, "1.69e-5");
                add_upper(s, "Ep-coeff", eb.coeff_Ep, "9.20e-5");
                add_upper(s, "Epp-coeff", eb.coeff_Epp, "5.02e-4");
            }
        } else {
            s.verdict = false;
            s.failure = "far-field constants unavailable";
        }
        cert.sections.push_back(std::move(s));
    }

    // ---- matching at T = t_{m,l}, c = c_r ----
    MatchCert mc;
    bool match_computed = false;
    {
        TripleEnclosure triple = make_triple(cfg.rho0);
        FarFieldConstants km;
        CertificateSection s_res{"residual"};
        CertificateSection s_jac{"jacobian"};
        CertificateSection s_match{"match"};
        try {
            if (!pipe_ok || !roots_ok) throw std::runtime_error("upstream pipeline failed");
            const IntervalValue tmb = t_m_bounds(triple);
            FarFieldParams pm;
            pm.T = tmb.lo();
            pm.c_max = triple.c.hi();
            pm.a_range = triple.a;
            pm.b_range = triple.b;
            pm.c_range = triple.c;
            km = compute_constants(pm, roots);
            FarfieldContraction fcm = verify_farfield_contraction(km, Rational(3, 100));
            if (!fcm.verdict)
                throw std::runtime_error("matching-mode far-field contraction failed: " + fcm.failure);
            h_derived_bounds(km);
            InnerEndpointBounds e52{pipe.final_state.E_abs, pipe.final_state.Ep_abs,
                                    pipe.final_state.Epp_abs};
            mc = certify_matching(inner, e52, km, triple);
            match_computed = true;

            if (default_rho)
                add_contained(s_match, "t-m-range", mc.t_m_range, band("1.998859", "1.999439"),
                              "must contain (1.998859, 1.999438)");
            else
                add_value(s_match, "t-m-range", mc.t_m_range);
            if (default_rho) {
                add_upper(s_res, "residual-a", mc.residual_a, "4.81e-6");
                add_upper(s_res, "residual-b", mc.residual_b, "1.64e-5");
                add_upper(s_res, "residual-c", mc.residual_c, "1.33e-5");
                add_upper(s_res, "residual-norm", mc.residual_norm, "1.16e-5");
            } else {
                add_value(s_res, "residual-a", mc.residual_a);
                add_value(s_res, "residual-b", mc.residual_b);
                add_value(s_res, "residual-c", mc.residual_c);
                add_value(s_res, "residual-norm", mc.residual_norm);
            }
            static const char* kJacBands[3][3] = {{"0.081", "0.059", "0.163"},
                                                  {"0.232", "0.168", "0.468"},
                                                  {"0.44", "0.384", "0.0029"}};
            static const char* kJacNames[3][3] = {{"dN1/da", "dN1/db", "dN1/dc"},
                                                  {"dN2/da", "dN2/db", "dN2/dc"},
                                                  {"dN3/da", "dN3/db", "dN3/dc"}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (default_rho)
                        add_upper(s_jac, kJacNames[i][j], mc.jacobian[i][j], kJacBands[i][j]);
                    else
                        add_value(s_jac, kJacNames[i][j], mc.jacobian[i][j]);
                }
            if (default_rho)
                add_upper(s_jac, "J-norm2", mc.J_norm2, "0.764");
            else
                add_value(s_jac, "J-norm2", mc.J_norm2);

            add_value(s_match, "alpha", mc.alpha);
            add_value(s_match, "budget(1-alpha)rho0",
                      (Rational(1) - mc.alpha) * IntervalValue(cfg.rho0));
            add_check(s_match, "fixed-point", mc.verdict, mc.residual_norm, mc.failure);
        } catch (const std::exception& ex) {
            s_match.verdict = false;
            s_match.failure = ex.what();
        }
        cert.sections.push_back(std::move(s_res));
        cert.sections.push_back(std::move(s_jac));
        cert.sections.push_back(std::move(s_match));
    }

    // ---- wall stress ----
    {
        CertificateSection s{"wall-stress"};
        if (match_computed && mc.verdict) {
            const WallStress w = wall_stress(make_triple(cfg.rho0));
            if (default_rho) {
                add_contained(s, "fpp0", w.fpp0, band("0.469578", "0.469622"));
                add_contained(s, "fpp0-blasius", w.fpp0_blasius, band("0.3320414", "0.3320734"));
            } else {
                add_contained(s, "fpp0", w.fpp0, band("0.469578", "0.469622"),
                              "containment meaningful for rho0 <= 5e-5");
                add_contained(s, "fpp0-blasius", w.fpp0_blasius, band("0.3320414", "0.3320734"));
            }
        } else {
            s.verdict = false;
            s.failure = "matching did not certify; no enclosure for the triple";
        }
        cert.sections.push_back(std::move(s));
    }

    cert.overall = true;
    for (const auto& s : cert.sections) cert.overall = cert.overall && s.verdict;
    cert.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
                        .count();
    return cert;
}

namespace {

njson interval_json(const IntervalValue& v, int digits) {
    njson j;
    j["lo"] = v.lo().to_decimal_string(digits, -1);
    j["hi"] = v.hi().to_decimal_string(digits, +1);
    j["lo_exact"] = v.lo().to_fraction_string();
    j["hi_exact"] = v.hi().to_fraction_string();
    return j;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    const int d = cert.config.digits;
    njson j;
    j["version"] = cert.version;
    njson jc;
    jc["digits"] = cert.config.digits;
    jc["T"] = cert.config.T.to_fraction_string();
    jc["c_max"] = cert.config.c_max.to_fraction_string();
    jc["rho0"] = cert.config.rho0.to_fraction_string();
    njson je = njson::array();
    for (const auto& e : cert.config.eps_inner) je.push_back(e.to_fraction_string());
    jc["eps_inner"] = je;
    if (cert.config.partition) {
        njson jp = njson::array();
        for (const auto& p : *cert.config.partition) jp.push_back(p.to_fraction_string());
        jc["partition"] = jp;
    }
    j["config"] = jc;
    njson sections = njson::array();
    for (const auto& s : cert.sections) {
        njson js;
        js["name"] = s.name;
        js["verdict"] = s.verdict ? "pass" : "fail";
        if (!s.failure.empty()) js["failure"] = s.failure;
        njson items = njson::array();
        for (const auto& it : s.items) {
            njson ji;
            ji["name"] = it.name;
            ji["computed"] = interval_json(it.computed, d);
            if (it.band) ji["band"] = interval_json(*it.band, d);
            ji["pass"] = it.pass;
            if (!it.note.empty()) ji["note"] = it.note;
            items.push_back(ji);
        }
        js["items"] = items;
        sections.push_back(js);
    }
    j["sections"] = sections;
    j["overall"] = cert.overall ? "pass" : "fail";
    j["timings_ms"]["total"] = cert.total_ms;
    return j;
}

std::string render_report(const nlohmann::ordered_json& j) {
    std::string out;
    out += "certificate version " + j["version"].get<std::string>() + "\n";
    out += "overall: " + j["overall"].get<std::string>() + "\n\n";
    for (const auto& s : j["sections"]) {
        out += s["name"].get<std::string>() + ": " + s["verdict"].get<std::string>() + "\n";
        if (s.contains("failure")) out += "  failure: " + s["failure"].get<std::string>() + "\n";
        for (const auto& it : s["items"]) {
            out += "  " + it["name"].get<std::string>() + " = [" +
                   it["computed"]["lo"].get<std::string>() + ", " +
                   it["computed"]["hi"].get<std::string>() + "]";
            if (it.contains("band"))
                out += " within [" + it["band"]["lo"].get<std::string>() + ", " +
                       it["band"]["hi"].get<std::string>() + "]";
            out += it["pass"].get<bool>() ? " ok" : " FAIL";
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

}  // namespace blasius
