#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blasius/oracle.hpp"
#include "blasius/special.hpp"

using namespace blasius;

TEST_CASE("erfc continued-fraction enclosure vs independent series") {
    // two fully independent certified routes must agree
    const Rational pts[] = {Rational(1), Rational(3, 2), Rational(2), Rational(199, 100),
                            Rational(5, 2)};
    for (const auto& x : pts) {
        IntervalValue cf = erfc_enclosure(IntervalValue(x));
        IntervalValue series = erfc_series_enclosure(x, 50);
        CHECK(IntervalValue::intersect(cf, series).has_value());
        CHECK(cf.contains(series.mid()));
        CHECK(cf.width() <= Rational::parse("1e-12"));
    }
}

TEST_CASE("erfc series matches frozen high-precision references") {
    CHECK(erfc_series_enclosure(Rational(3, 2), 45)
              .contains(Rational::parse("0.0338948535246892729330237383540521413185895207")));
    CHECK(erfc_series_enclosure(Rational(2), 45)
              .contains(Rational::parse("0.00467773498104726583793074363274707138910820296")));
}

TEST_CASE("erfc enclosure agrees with the float library at sqrt(1.99)") {
    IntervalValue x = sqrt_enclosure(IntervalValue(Rational(199, 100)));
    IntervalValue enc = erfc_enclosure(x);
    const long double f = erfcl(sqrtl(1.99L));
    CHECK(enc.lo().to_long_double() - 1e-15L <= f);
    CHECK(f <= enc.hi().to_long_double() + 1e-15L);
}

TEST_CASE("erfc is decreasing (interval order)") {
    IntervalValue at2 = erfc_enclosure(IntervalValue(Rational(2)));
    IntervalValue at15 = erfc_enclosure(IntervalValue(Rational(3, 2)));
    CHECK(at2.hi() < at15.lo());
}

TEST_CASE("erfc rejects arguments below the supported range") {
    CHECK_THROWS_AS(erfc_enclosure(IntervalValue(Rational(1, 2))), std::domain_error);
}

TEST_CASE("erfc enclosure over an interval argument covers both endpoints") {
    IntervalValue X(Rational(3, 2), Rational(2));
    IntervalValue r = erfc_enclosure(X);
    CHECK(r.contains(erfc_series_enclosure(Rational(3, 2)).mid()));
    CHECK(r.contains(erfc_series_enclosure(Rational(2)).mid()));
}

TEST_CASE("I0 and J0 at t = 1.99") {
    IntervalValue t(Rational(199, 100));
    auto [i0, j0] = I0_J0_enclosure(t);
    CHECK(i0.contains(Rational::parse("0.1577977076551959790841978247944996520377")));
    // Laplace ranges: 2t I0 in (0,1), 4t J0 in (0,1)
    IntervalValue i1 = Rational(2) * t * i0;
    IntervalValue j1 = Rational(4) * t * j0;
    CHECK(i1.lo() > Rational(0));
    CHECK(i1.hi() < Rational(1));
    CHECK(j1.lo() > Rational(0));
    CHECK(j1.hi() < Rational(1));
    // the float oracle value sits inside the enclosure (up to float noise)
    const double i0f = static_cast<double>(oracle_I0(1.99L));
    CHECK(i0.lo().to_double() - 1e-15 <= i0f);
    CHECK(i0f <= i0.hi().to_double() + 1e-15);
}

TEST_CASE("I0 is decreasing in t") {
    auto [i0a, j0a] = I0_J0_enclosure(IntervalValue(Rational(2)));
    auto [i0b, j0b] = I0_J0_enclosure(IntervalValue(Rational(3)));
    CHECK(i0b.hi() < i0a.lo());
    CHECK(j0b.hi() < j0a.lo());
}

TEST_CASE("Q2(1.99) enclosure") {
    IntervalValue q2 = Q2_enclosure(IntervalValue(Rational(199, 100)));
    CHECK(q2.contains(Rational::parse("0.0146024291934709151")));
    CHECK(q2.width() < Rational::parse("1e-10"));
    // the classical 0.0147 figure holds to +-5e-4
    CHECK(q2.lo() > Rational::parse("0.0142"));
    CHECK(q2.hi() < Rational::parse("0.0152"));
}

TEST_CASE("I2 recovery stays in (0,1)") {
    IntervalValue t(Rational(199, 100));
    auto [i0, j0] = I0_J0_enclosure(t);
    (void)j0;
    IntervalValue i2 = I2_enclosure(t, i0);
    CHECK(i2.lo() >= Rational(0));
    CHECK(i2.hi() <= Rational(1));
}
