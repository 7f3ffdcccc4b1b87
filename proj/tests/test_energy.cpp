#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "blasius/energy.hpp"

using namespace blasius;

namespace {

struct Fixture {
    InnerApproximant inner = build_inner();
    Partition part = paper_partition();
    RemainderBounds rem = bound_remainder(inner, part);
    std::vector<SignChangeBracket> brackets = localize_sign_changes(inner, part, rem);
};

const Fixture& fx() {
    static const Fixture kF;
    return kF;
}

// Float integration of phi''' + F0 phi'' + F0'' phi = r on [xl, xr], fixed-step
// RK4; returns sup |phi''|.
long double sup_phipp(const InnerApproximant& m, long double xl, long double xr, long double p0,
                      long double p1, long double p2,
                      const std::function<long double(long double)>& r) {
    const int n = 4000;
    const long double h = (xr - xl) / n;
    long double y0 = p0, y1 = p1, y2 = p2, x = xl;
    long double sup = fabsl(y2);
    auto f2 = [&](long double xx, long double a0, long double a2) {
        return r(xx) - m.F0.eval_long_double(xx) * a2 - m.F0pp.eval_long_double(xx) * a0;
    };
    for (int i = 0; i < n; ++i) {
        const long double k10 = y1, k11 = y2, k12 = f2(x, y0, y2);
        const long double k20 = y1 + h / 2 * k11, k21 = y2 + h / 2 * k12,
                          k22 = f2(x + h / 2, y0 + h / 2 * k10, y2 + h / 2 * k12);
        const long double k30 = y1 + h / 2 * k21, k31 = y2 + h / 2 * k22,
                          k32 = f2(x + h / 2, y0 + h / 2 * k20, y2 + h / 2 * k22);
        const long double k40 = y1 + h * k31, k41 = y2 + h * k32,
                          k42 = f2(x + h, y0 + h * k30, y2 + h * k32);
        y0 += h / 6 * (k10 + 2 * k20 + 2 * k30 + k40);
        y1 += h / 6 * (k11 + 2 * k21 + 2 * k31 + k41);
        y2 += h / 6 * (k12 + 2 * k22 + 2 * k32 + k42);
        x += h;
        sup = std::max(sup, fabsl(y2));
    }
    return sup;
}

}  // namespace

TEST_CASE("weights: quartic term vanishes at the left endpoint") {
    const auto& f = fx();
    const Rational xl = x_c(), xr(2);
    EnergyWeights w = build_weights(f.inner, WeightKind::Q1, xl, xr, f.brackets);
    const Rational expect = Rational(2) * f.inner.F0pp.eval(xl) - Rational(2) * f.inner.F0.eval(xl);
    CHECK(w.branch_pos.eval(xl) == expect);
    CHECK(w.branch_neg.eval(xl) == Rational(0));
}

TEST_CASE("branch side selection") {
    const auto& f = fx();
    // right of every crossing: negative branch only
    CHECK(build_weights(f.inner, WeightKind::Q, Rational(2), Rational(5, 2), f.brackets).side ==
          BranchSide::negative);
    CHECK(build_weights(f.inner, WeightKind::Q1, Rational(2), Rational(5, 2), f.brackets).side ==
          BranchSide::negative);
    // head: all conditions positive
    CHECK(build_weights(f.inner, WeightKind::Q, Rational(0), Rational(1, 8), f.brackets).side ==
          BranchSide::positive);
    CHECK(build_weights(f.inner, WeightKind::Q2, Rational(0), Rational(1, 8), f.brackets).side ==
          BranchSide::positive);
    // [0, x_c] straddles the Q1/Q2 switches but not the Q one
    CHECK(build_weights(f.inner, WeightKind::Q, Rational(0), x_c(), f.brackets).side ==
          BranchSide::positive);
    CHECK(build_weights(f.inner, WeightKind::Q1, Rational(0), x_c(), f.brackets).side ==
          BranchSide::split);
}

TEST_CASE("golden energy bounds on the three chain intervals") {
    const auto& f = fx();
    EnergyBoundSet i1 = bound_energy_set(f.inner, Rational(0), x_c(), f.brackets);
    CHECK(i1.M.hi() <= Rational::parse("3.03"));

    EnergyBoundSet i2 = bound_energy_set(f.inner, x_c(), Rational(2), f.brackets);
    CHECK(i2.M1.hi() <= Rational::parse("0.572"));
    CHECK(i2.M2.hi() <= Rational::parse("0.199"));
    CHECK(i2.M3.hi() <= Rational::parse("1.01"));
    CHECK(i2.M.hi() <= Rational::parse("0.825"));

    EnergyBoundSet i3 = bound_energy_set(f.inner, Rational(2), Rational(5, 2), f.brackets);
    CHECK(i3.M1.hi() <= Rational::parse("0.3"));
    CHECK(i3.M2.hi() <= Rational::parse("0.0744"));
    CHECK(i3.M3.hi() <= Rational::parse("1.01"));
    CHECK(i3.M.hi() <= Rational::parse("0.708"));
}

TEST_CASE("float fundamental-system sups stay below the certified bounds") {
    const auto& f = fx();
    struct Block {
        Rational xl, xr;
    } blocks[] = {{Rational(0), x_c()}, {x_c(), Rational(2)}, {Rational(2), Rational(5, 2)}};
    std::mt19937_64 rng(42);
    for (const auto& blk : blocks) {
        EnergyBoundSet eb = bound_energy_set(f.inner, blk.xl, blk.xr, f.brackets);
        const long double xl = blk.xl.to_long_double(), xr = blk.xr.to_long_double();
        auto zero = [](long double) { return 0.0L; };
        CHECK(sup_phipp(f.inner, xl, xr, 1, 0, 0, zero) <= eb.M1.hi().to_long_double());
        CHECK(sup_phipp(f.inner, xl, xr, 0, 1, 0, zero) <= eb.M2.hi().to_long_double());
        CHECK(sup_phipp(f.inner, xl, xr, 0, 0, 1, zero) <= eb.M3.hi().to_long_double());
        // ||G||: dense test forcings with ||r|| <= 1
        std::uniform_real_distribution<double> amp(-1.0, 1.0);
        std::uniform_real_distribution<double> freq(0.0, 8.0);
        for (int trial = 0; trial < 12; ++trial) {
            const double a = amp(rng), w = freq(rng), ph = amp(rng);
            auto r = [&](long double xx) {
                return static_cast<long double>(a * std::cos(w * static_cast<double>(xx) + ph));
            };
            CHECK(sup_phipp(f.inner, xl, xr, 0, 0, 0, r) <= eb.M.hi().to_long_double());
        }
    }
}

TEST_CASE("bounds grow with the interval (nested chains)") {
    const auto& f = fx();
    const Rational xl = x_c();
    EnergyBoundSet prev;
    bool first = true;
    for (const Rational& xr : {Rational(3, 2), Rational(7, 4), Rational(2)}) {
        EnergyBoundSet cur = bound_energy_set(f.inner, xl, xr, f.brackets);
        if (!first) {
            CHECK(cur.M1.hi() >= prev.M1.hi());
            CHECK(cur.M2.hi() >= prev.M2.hi());
            CHECK(cur.M3.hi() >= prev.M3.hi());
            CHECK(cur.M.hi() >= prev.M.hi());
        }
        prev = cur;
        first = false;
    }
}

TEST_CASE("single-branch integral is additive across an interior split") {
    const auto& f = fx();
    EnergyWeights w = build_weights(f.inner, WeightKind::Q, Rational(2), Rational(5, 2), f.brackets);
    REQUIRE(w.side == BranchSide::negative);
    const Rational whole = definite_integral(w.branch_neg, Rational(2), Rational(5, 2));
    const Rational split = definite_integral(w.branch_neg, Rational(2), Rational(9, 4)) +
                           definite_integral(w.branch_neg, Rational(9, 4), Rational(5, 2));
    CHECK(whole == split);
    IntervalValue enc = integrate_weight(w);
    CHECK(enc.contains(whole));
}

TEST_CASE("bracket hull penalty in split integrals is negligible") {
    const auto& f = fx();
    EnergyWeights w = build_weights(f.inner, WeightKind::Q, Rational(0), Rational(2), f.brackets);
    REQUIRE(w.side == BranchSide::split);
    IntervalValue enc = integrate_weight(w);
    const Rational lower = definite_integral(w.branch_pos, Rational(0), w.switch_lo) +
                           definite_integral(w.branch_neg, w.switch_hi, Rational(2));
    CHECK(enc.lo() >= lower);
    CHECK(enc.hi() <= lower + (w.switch_hi - w.switch_lo) * Rational(3));
    CHECK(enc.width() <= Rational::parse("1e-5"));
}

TEST_CASE("weight construction rejects out-of-domain intervals") {
    const auto& f = fx();
    CHECK_THROWS(build_weights(f.inner, WeightKind::Q, Rational(-1), Rational(1), f.brackets));
    CHECK_THROWS(build_weights(f.inner, WeightKind::Q, Rational(1), Rational(3), f.brackets));
}
