#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blasius/matching.hpp"
#include "blasius/oracle.hpp"

using namespace blasius;

namespace {

struct Fixture {
    InnerApproximant inner = build_inner();
    AppendixRoots roots = isolate_appendix_roots();
    TripleEnclosure triple = make_triple(Rational(5, 100000));
    FarFieldConstants km;
    InnerEndpointBounds e52;

    Fixture() {
        Partition part = paper_partition();
        RemainderBounds rem = bound_remainder(inner, part);
        auto brackets = localize_sign_changes(inner, part, rem);
        InnerPipelineResult pipe = run_inner_pipeline(inner, part, rem, brackets);
        e52 = {pipe.final_state.E_abs, pipe.final_state.Ep_abs, pipe.final_state.Epp_abs};
        FarFieldParams pm;
        pm.T = t_m_bounds(triple).lo();
        pm.c_max = triple.c.hi();
        km = compute_constants(pm, roots);
        verify_farfield_contraction(km, Rational(3, 100));
        h_derived_bounds(km);
    }
};

const Fixture& fx() {
    static const Fixture kF;
    return kF;
}

}  // namespace

TEST_CASE("t_m bounds and center") {
    const auto& f = fx();
    IntervalValue tm = t_m_bounds(f.triple);
    // six reference digits on both endpoints
    CHECK(tm.lo() >= Rational::parse("1.998859"));
    CHECK(tm.lo() <= Rational::parse("1.998860"));
    CHECK(tm.hi() >= Rational::parse("1.999438"));
    CHECK(tm.hi() <= Rational::parse("1.999439"));
    const Rational tm0 = t_m_at(a0_center(), b0_center());
    CHECK(tm.contains(tm0));
    // monotone in a at fixed b/a: t_m = (a/2) u^2 with u fixed
    const Rational ratio = b0_center() / a0_center();
    Rational prev(0);
    for (long k = 160; k <= 170; ++k) {
        const Rational a(k, 100);
        const Rational tmk = t_m_at(a, ratio * a);
        CHECK(tmk > prev);
        prev = tmk;
    }
}

TEST_CASE("residual bounds against the reference constants") {
    const auto& f = fx();
    MatchCert cert = certify_matching(f.inner, f.e52, f.km, f.triple);
    CHECK(cert.residual_a.hi() <= Rational::parse("4.81e-6"));
    CHECK(cert.residual_b.hi() <= Rational::parse("1.64e-5"));
    CHECK(cert.residual_c.hi() <= Rational::parse("1.33e-5"));
    CHECK(cert.residual_norm.hi() <= Rational::parse("1.16e-5"));
}

TEST_CASE("jacobian entry bounds and norm") {
    const auto& f = fx();
    MatchCert cert = certify_matching(f.inner, f.e52, f.km, f.triple);
    const char* bands[3][3] = {{"0.081", "0.059", "0.163"},
                               {"0.232", "0.168", "0.468"},
                               {"0.44", "0.384", "0.0029"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(cert.jacobian[i][j].hi() <= Rational::parse(bands[i][j]));
    CHECK(cert.J_norm2.hi() <= Rational::parse("0.764"));

    // second route: weighted Frobenius computed from the entry table
    const Rational w[3][3] = {{Rational(1), Rational(2), Rational(2)},
                              {Rational(1, 2), Rational(1), Rational(1)},
                              {Rational(1, 2), Rational(1), Rational(1)}};
    IntervalValue sum{Rational(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            IntervalValue e = cert.jacobian[i][j] * w[i][j];
            sum = sum + e * e;
        }
    IntervalValue norm2 = sqrt_enclosure(sum);
    CHECK(IntervalValue::intersect(norm2, cert.J_norm2).has_value());
}

TEST_CASE("fixed-point lemma verdict") {
    const auto& f = fx();
    MatchCert cert = certify_matching(f.inner, f.e52, f.km, f.triple);
    CHECK(cert.verdict);
    CHECK(cert.failure.empty());

    // pure-logic cases
    CHECK(lemma_match_verdict(IntervalValue(Rational(0)), IntervalValue(Rational(1, 2)),
                              Rational(5, 100000))
              .first);
    auto bad_alpha = lemma_match_verdict(IntervalValue(Rational(0)), IntervalValue(Rational(1)),
                                         Rational(5, 100000));
    CHECK_FALSE(bad_alpha.first);
    CHECK(bad_alpha.second.find("||J||_2") != std::string::npos);
    auto bad_budget = lemma_match_verdict(IntervalValue(Rational(1, 100)),
                                          IntervalValue(Rational(1, 2)), Rational(5, 100000));
    CHECK_FALSE(bad_budget.first);
    CHECK(bad_budget.second.find("budget") != std::string::npos);
}

TEST_CASE("shrinking rho0 to the empirical scale still certifies") {
    const auto& f = fx();
    TripleEnclosure small = make_triple(Rational::parse("1.4e-5"));
    FarFieldParams pm;
    pm.T = t_m_bounds(small).lo();
    pm.c_max = small.c.hi();
    FarFieldConstants km = compute_constants(pm, f.roots);
    verify_farfield_contraction(km, Rational(3, 100));
    h_derived_bounds(km);
    // empirical error scale for the polynomial piece
    InnerEndpointBounds e52{IntervalValue(Rational::parse("2e-7")),
                            IntervalValue(Rational::parse("2e-7")),
                            IntervalValue(Rational::parse("5e-7"))};
    MatchCert cert = certify_matching(f.inner, e52, km, small);
    CHECK(cert.verdict);
}

TEST_CASE("residual and jacobian bounds are monotone in rho0") {
    const auto& f = fx();
    MatchCert big = certify_matching(f.inner, f.e52, f.km, f.triple);
    TripleEnclosure small = make_triple(Rational::parse("1.4e-5"));
    FarFieldParams pm;
    pm.T = t_m_bounds(small).lo();
    pm.c_max = small.c.hi();
    FarFieldConstants km = compute_constants(pm, f.roots);
    verify_farfield_contraction(km, Rational(3, 100));
    h_derived_bounds(km);
    MatchCert sm = certify_matching(f.inner, f.e52, km, small);
    CHECK(sm.residual_a.hi() <= big.residual_a.hi());
    CHECK(sm.residual_b.hi() <= big.residual_b.hi());
    CHECK(sm.residual_c.hi() <= big.residual_c.hi());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sm.jacobian[i][j].hi() <= big.jacobian[i][j].hi());
    CHECK(sm.J_norm2.hi() <= big.J_norm2.hi());
}

TEST_CASE("wall stress enclosures") {
    const auto& f = fx();
    WallStress w = wall_stress(f.triple);
    CHECK(w.fpp0.lo() >= Rational::parse("0.469578"));
    CHECK(w.fpp0.hi() <= Rational::parse("0.469622"));
    CHECK(w.fpp0_blasius.lo() >= Rational::parse("0.3320414"));
    CHECK(w.fpp0_blasius.hi() <= Rational::parse("0.3320734"));

    // a = 1 degenerates to 1 exactly up to the sqrt grid
    TripleEnclosure unit = f.triple;
    unit.a = IntervalValue(Rational(1));
    WallStress wu = wall_stress(unit);
    CHECK(wu.fpp0.contains(Rational(1)));
    CHECK(wu.fpp0.width() <= Rational::parse("1e-30"));
}

TEST_CASE("C2 fixed point matches the published digits and sits inside the ball") {
    const auto& f = fx();
    C2Triple t = c2_triple(f.inner, 200, 1e-17L);
    CHECK(std::abs(static_cast<double>(t.a) - 1.6551904561499) < 1e-12);
    CHECK(std::abs(static_cast<double>(t.b) - -1.565439826457) < 1e-11);
    CHECK(std::abs(static_cast<double>(t.c) - 0.233728727537) < 1e-11);
    // weighted distance to the center within rho0
    const double da = static_cast<double>(t.a) - a0_center().to_double();
    const double db = static_cast<double>(t.b) - b0_center().to_double();
    const double dc = static_cast<double>(t.c) - c0_center().to_double();
    CHECK(std::sqrt(da * da + db * db / 4 + dc * dc / 4) <= 5e-5);
    CHECK_THROWS(c2_triple(f.inner, 1, 1e-30L));
}

TEST_CASE("make_triple validates rho0") {
    CHECK_THROWS(make_triple(Rational(0)));
    CHECK_THROWS(make_triple(Rational(-1)));
}
