#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blasius/inner.hpp"

using namespace blasius;

namespace {
const InnerApproximant& model() {
    static const InnerApproximant kInner = build_inner();
    return kInner;
}
}  // namespace

TEST_CASE("model construction invariants") {
    const auto& m = model();
    CHECK(m.F0.eval(Rational(0)) == Rational(0));
    CHECK(m.F0p.eval(Rational(0)) == Rational(0));
    CHECK(m.F0pp.eval(Rational(0)) == Rational(1));
    CHECK(m.F0.degree() == 16);
    CHECK(m.F0.coeff(2) == Rational(1, 2));
    CHECK(m.F0.coeff(3) == Rational(0));
    CHECK(m.R.degree() == 30);
    CHECK((m.F0 * m.F0pp).degree() == 30);
}

TEST_CASE("defect identity holds coefficient-wise") {
    const auto& m = model();
    // rebuild through the opposite multiplication order and compare exactly
    RationalPoly alt = m.F0pp * m.F0 + m.F0ppp;
    CHECK((alt - m.R).is_zero());
    for (int k = 0; k <= 30; ++k) CHECK(alt.coeff(k) == m.R.coeff(k));
}

TEST_CASE("two evaluation orders agree at 5/2") {
    const auto& m = model();
    const Rational x(5, 2);
    Rational direct(0), xp(1);
    for (int k = 0; k <= m.F0.degree(); ++k) {
        direct += m.F0.coeff(k) * xp;
        xp *= x;
    }
    CHECK(direct == m.F0.eval(x));
}

TEST_CASE("partition layout") {
    Partition p = paper_partition();
    CHECK(p.cells() == 14);
    CHECK(p.breakpoints.front() == Rational(0));
    CHECK(p.breakpoints.back() == Rational(5, 2));
    for (std::size_t i = 1; i < p.breakpoints.size(); ++i)
        CHECK(p.breakpoints[i - 1] < p.breakpoints[i]);
    CHECK(p.breakpoints[8] == x_c());
}

TEST_CASE("remainder bands over the three blocks") {
    const auto& m = model();
    RemainderBounds rem = bound_remainder(m, paper_partition());
    CHECK(rem.per_cell.size() == 14);

    CHECK(rem.on_left.lo() >= Rational::parse("-3.22e-7"));
    CHECK(rem.on_left.hi() <= Rational::parse("2.505e-7"));
    CHECK(rem.on_middle.lo() >= Rational::parse("4.6e-8"));
    CHECK(rem.on_middle.hi() <= Rational::parse("4.06e-7"));
    CHECK(rem.on_right.lo() >= Rational::parse("2.78e-7"));
    CHECK(rem.on_right.hi() <= Rational::parse("6.73e-7"));
    CHECK(rem.sup_global <= Rational::parse("6.73e-7"));
}

TEST_CASE("remainder enclosures contain dense samples") {
    const auto& m = model();
    RemainderBounds rem = bound_remainder(m, paper_partition());
    for (const auto& cell : rem.per_cell) {
        const double lo = cell.range.lo().to_double() - 1e-18;
        const double hi = cell.range.hi().to_double() + 1e-18;
        for (int k = 0; k <= 715; ++k) {
            double x = cell.xl.to_double() + (cell.xr - cell.xl).to_double() * k / 715.0;
            double v = m.R.eval_double(x);
            CHECK(v >= lo);
            CHECK(v <= hi);
        }
    }
}

TEST_CASE("recentering the defect polynomial matches direct evaluation") {
    const auto& m = model();
    const Rational xl(9, 4), xr(12, 5);
    RationalPoly rc = poly_affine_recenter(m.R, xl, xr);
    CHECK(rc.eval(Rational(-1)) == m.R.eval(xl));
    CHECK(rc.eval(Rational(1)) == m.R.eval(xr));
    CHECK(rc.eval(Rational(0)) == m.R.eval((xl + xr) / 2));
    CHECK(rc.degree() == 30);
}

TEST_CASE("bound_remainder validates its partition") {
    const auto& m = model();
    Partition bad;
    bad.breakpoints = {Rational(0), Rational(1), Rational(5, 2)};  // lacks x_c and 2
    CHECK_THROWS(bound_remainder(m, bad));
}

TEST_CASE("F0 family bands") {
    const auto& m = model();
    F0FamilyBounds fam = bound_F0_family(m);
    CHECK(fam.F0_head.lo() >= Rational::parse("-5e-10"));
    CHECK(fam.F0_head.hi() <= Rational::parse("0.008"));
    CHECK(fam.F0p_head.lo() >= Rational::parse("-8e-12"));
    CHECK(fam.F0p_head.hi() <= Rational::parse("0.13"));
    CHECK(fam.F0pp_head.lo() >= Rational::parse("0.99"));
    CHECK(fam.F0pp_head.hi() <= Rational::parse("1.000000002"));
    // the 0.03 constant holds from 1/4; at 1/8 the exact value is ~1/128
    CHECK(fam.F0_main.lo() >= Rational::parse("0.0078"));
    CHECK(fam.F0_main.lo() <= m.F0.eval(Rational(1, 8)));
    CHECK(fam.F0_quarter.lo() >= Rational::parse("0.03"));
    CHECK(fam.F0_main.hi() <= Rational::parse("2.59"));
    CHECK(fam.F0p_main.lo() >= Rational::parse("0.12"));
    CHECK(fam.F0p_main.hi() <= Rational::parse("1.7"));
    CHECK(fam.F0pp_main.lo() >= Rational::parse("0.09"));
    CHECK(fam.F0pp_main.hi() <= Rational(1));
}

TEST_CASE("sign-change brackets") {
    const auto& m = model();
    RemainderBounds rem = bound_remainder(m, paper_partition());
    auto brackets = localize_sign_changes(m, paper_partition(), rem);
    REQUIRE(brackets.size() == 3);

    const auto& b0 = brackets[0];
    CHECK(b0.expr == SignExpr::F0pp_minus_2F0_plus_1);
    CHECK(b0.lo == Rational(1322040, 1000000));
    CHECK(b0.hi == Rational(1322041, 1000000));
    CHECK(b0.value_lo.sign() > 0);
    CHECK(b0.value_hi.sign() < 0);
    CHECK(b0.monotone_certified);
    CHECK(b0.positive_on_head);

    const auto& b1 = brackets[1];
    CHECK(b1.expr == SignExpr::twoF0pp_minus_2F0);
    CHECK(b1.lo == Rational(12314283, 10000000));
    CHECK(b1.hi == Rational(12314284, 10000000));
    CHECK(b1.value_lo.sign() > 0);
    CHECK(b1.value_hi.sign() < 0);
    CHECK(b1.monotone_certified);

    const auto& b2 = brackets[2];
    CHECK(b2.expr == SignExpr::F0pp_minus_2F0);
    CHECK(b2.hi - b2.lo <= Rational(1, 1000000));
    CHECK(b2.value_lo.sign() > 0);
    CHECK(b2.value_hi.sign() < 0);
    CHECK(b2.monotone_certified);
    CHECK(b2.positive_on_head);
}

TEST_CASE("refined range bound is a subset of the plain one") {
    const auto& m = model();
    IntervalValue coarse = range_bound(m.R, Rational(0), Rational(1, 16));
    IntervalValue fine = range_bound_refined(m.R, Rational(0), Rational(1, 16), 3);
    CHECK(coarse.contains(fine));
}
