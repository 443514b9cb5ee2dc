#include <cmath>

#include "doctest.h"
#include "spin7/families.hpp"
#include "spin7/flow.hpp"
#include "spin7/rational.hpp"

using namespace spin7;

TEST_SUITE("families") {

TEST_CASE("exact coefficients of the nut family at r = 3") {
    FamilySquares sq = MetricFamily::squares(Family::A8, Rational(3), Rational(1));
    CHECK(sq.g_rr == Rational(4, 3));
    CHECK(sq.coef_S4 == Rational(4));
    CHECK(sq.coef_R12 == Rational(12));
    CHECK(sq.coef_R3 == Rational(3));

    MetricSample s = MetricFamily(Family::A8).sample(3.0);
    CHECK(s.g_rr == doctest::Approx(4.0 / 3).epsilon(1e-14));
    CHECK(s.coef_S4 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(s.coef_R12 == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(s.coef_R3 == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("b carries the family sign") {
    CHECK(MetricFamily(Family::A8).sample(2.0).triad.b < 0);
    CHECK(MetricFamily(Family::B8).sample(4.0).triad.b > 0);
}

TEST_CASE("frozen endpoint triads") {
    MetricSample a2 = MetricFamily(Family::A8).sample(2.0);
    CHECK(a2.triad.a == doctest::Approx(1.118033988749894848).epsilon(1e-15));
    CHECK(a2.triad.b == doctest::Approx(-0.7453559924999298988).epsilon(1e-15));
    CHECK(a2.triad.c == doctest::Approx(1.224744871391589049).epsilon(1e-15));
    MetricSample b6 = MetricFamily(Family::B8).sample(6.0);
    CHECK(b6.triad.a == doctest::Approx(2.291287847477920003).epsilon(1e-15));
    CHECK(b6.triad.b == doctest::Approx(0.9165151389911680013).epsilon(1e-15));
    CHECK(b6.triad.c == doctest::Approx(4.183300132670377740).epsilon(1e-15));
}

TEST_CASE("samples satisfy the first-order system in arc length") {
    for (auto [fam, radii] : {std::pair<Family, std::array<double, 3>>
                                  {Family::A8, {1.5, 3.0, 10.0}},
                                  {Family::B8, {3.5, 5.0, 12.0}},
                                  {Family::SpinBundle, {1.3, 2.0, 6.0}}}) {
        MetricFamily mf(fam);
        for (double r : radii) {
            MetricSample s = mf.sample(r);
            auto f = flow_rhs(s.triad.a, s.triad.b, s.triad.c);
            CHECK(std::fabs(f[0] - s.triad.da) < 1e-12);
            CHECK(std::fabs(f[1] - s.triad.db) < 1e-12);
            CHECK(std::fabs(f[2] - s.triad.dc) < 1e-12);
        }
    }
    // the product of the 3-form cone with a circle is Ricci-flat but does
    // not solve the first-order system
    MetricSample g = MetricFamily(Family::G2Circle).sample(2.0);
    auto f = flow_rhs(g.triad.a, g.triad.b, g.triad.c);
    CHECK(std::fabs(f[1] - g.triad.db) > 0.01);
}

TEST_CASE("bolt data") {
    BoltData nut = MetricFamily(Family::A8).bolt_data();
    CHECK(nut.r_bolt == doctest::Approx(1.0));
    CHECK(nut.rates[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(nut.rates[1] == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(nut.rates[2] == doctest::Approx(0.5).epsilon(1e-6));

    BoltData bolt = MetricFamily(Family::B8).bolt_data();
    CHECK(bolt.r_bolt == doctest::Approx(3.0));
    CHECK(bolt.s4_radius_sq == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(bolt.rates[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(bolt.rates[1] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(std::fabs(bolt.rates[2]) < 1e-6);
}

TEST_CASE("arc length between reference radii") {
    CHECK(MetricFamily(Family::A8).arc_length_from_bolt(5.0) -
              MetricFamily(Family::A8).arc_length_from_bolt(2.0) ==
          doctest::Approx(3.420786271992590499).epsilon(1e-12));
    CHECK(MetricFamily(Family::B8).arc_length_from_bolt(6.0) -
              MetricFamily(Family::B8).arc_length_from_bolt(3.5) ==
          doctest::Approx(3.082575694955840007).epsilon(1e-12));
}

TEST_CASE("asymptotics: locally conical with a fixed circle") {
    for (Family fam : {Family::A8, Family::B8}) {
        InterpolationReport rep = MetricFamily(fam).interpolation_report();
        CHECK(rep.a_slope_infinity == doctest::Approx(0.5).epsilon(1e-4));
        CHECK(rep.c_slope_infinity == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-4));
        CHECK(rep.cone_ratio == doctest::Approx(2.0).epsilon(1e-4));
        CHECK(rep.circle_radius_sq == doctest::Approx(4.0).epsilon(1e-4));
        CHECK(std::fabs(rep.b_infinity) == doctest::Approx(1.0).epsilon(1e-4));
    }
    CHECK(MetricFamily(Family::A8).interpolation_report().b_infinity < 0);
    CHECK(MetricFamily(Family::B8).interpolation_report().b_infinity > 0);
}

TEST_CASE("spin-bundle coefficients at rational parameter points") {
    FamilySquares sq = MetricFamily::spin_bundle_squares_param(Rational(2), Rational(1));
    // r = u^3 = 8, w = 1 - 2^-10
    CHECK(sq.coef_S4 == Rational(9, 20) * 64);
    CHECK(sq.coef_R12 == sq.coef_R3);
    CHECK(sq.g_rr * (Rational(1) - Rational(1, 1024)) == 1);
}

}  // TEST_SUITE
