#include <cmath>

#include "doctest.h"
#include "spin7/curvature.hpp"
#include "spin7/families.hpp"
#include "spin7/flow.hpp"
#include "spin7/rational.hpp"

using namespace spin7;

namespace {

// a generic rational 2-jet: no relation between values and derivatives,
// so every term of the curvature formula is exercised
TriadJet<Rational> generic_jets() {
    TriadJet<Rational> t;
    t.a = Rational(5, 4);  t.da = Rational(1, 3);   t.d2a = Rational(-3, 11);
    t.b = Rational(-2, 3); t.db = Rational(-1, 5);  t.d2b = Rational(1, 2);
    t.c = Rational(9, 8);  t.dc = Rational(2, 7);   t.d2c = Rational(-1, 13);
    return t;
}

}  // namespace

TEST_SUITE("curvature") {

TEST_CASE("connection entries at a generic rational jet") {
    auto t = generic_jets();
    CHECK(connection_entry(0, 7, 0, t).v == Rational(16, 63));
    CHECK(connection_entry(0, 1, 4, t).v == Rational(38, 405));
    CHECK(connection_entry(4, 5, 6, t).v == Rational(193, 150));
    CHECK(connection_entry(3, 6, 0, t).v == Rational(64, 243));
    CHECK(connection_entry(4, 6, 5, t).v == Rational(-16, 75));
    CHECK(connection_entry(7, 7, 0, t).v == 0);
    // antisymmetry
    CHECK(connection_entry(7, 0, 0, t).v == Rational(-16, 63));
}

TEST_CASE("curvature components at a generic rational jet") {
    auto t = generic_jets();
    auto rm = riemann(t);
    CHECK(rm.stray == 0);
    CHECK(rm.r[0][1][0][1] == Rational(-640, 107163));
    CHECK(rm.r[0][7][0][7] == Rational(8, 117));
    CHECK(rm.r[4][5][4][5] == Rational(2432, 5625));
    CHECK(rm.r[0][1][2][3] == Rational(-10304, 59049));
    CHECK(rm.r[0][4][0][4] == Rational(40448, 229635));
    CHECK(rm.r[4][7][4][7] == Rational(12, 55));
    CHECK(rm.r[6][7][6][7] == Rational(3, 4));
    CHECK(rm.r[0][1][6][7] == 0);
    CHECK(rm.r[2][5][3][4] == 0);

    auto ric = ricci(rm);
    CHECK(ric[0][0] == Rational(34583008, 37614213));
    CHECK(ric[4][4] == Rational(416980154, 315748125));
    CHECK(ric[6][6] == Rational(675531421, 1033357500));
    CHECK(ric[7][7] == Rational(37577, 25740));
    CHECK(ric[0][3] == 0);
    CHECK(ric[4][6] == 0);
}

TEST_CASE("the nut family is Ricci-flat with the expected curvature scale") {
    // exact jets at r = 3, scale 1: a = sqrt(3), b = -sqrt(3)/2, c = 2
    MetricSample s = MetricFamily(Family::A8).sample(3.0);
    CHECK(ricci_flat_residual(s.triad) < 1e-13);
    auto rm = riemann(s.triad);
    CHECK(rm.r[0][1][0][1] == doctest::Approx(1.0 / 256).epsilon(1e-12));
    CHECK(rm.r[0][7][0][7] == doctest::Approx(-3.0 / 256).epsilon(1e-12));
    CHECK(rm.r[4][5][4][5] == doctest::Approx(3.0 / 16).epsilon(1e-12));
    CHECK(std::fabs(rm.r[4][7][4][7]) < 1e-14);
    CHECK(rm.r[6][7][6][7] == doctest::Approx(3.0 / 64).epsilon(1e-12));
    CHECK(rm.r[0][1][2][3] == doctest::Approx(-9.0 / 256).epsilon(1e-12));
    CHECK(std::fabs(rm.r[0][1][6][7]) < 1e-14);
}

TEST_CASE("curvature stays bounded at the nut") {
    // the closing point is smooth: |Riem| tends to 3/4 there
    CHECK(max_abs_riemann(MetricFamily(Family::A8).sample(1.0 + 1e-6).triad) ==
          doctest::Approx(0.75).epsilon(1e-4));
}

TEST_CASE("flow jets of a generic point are Ricci-flat") {
    TriadJet<double> tj = flow_jets(1.07, -0.52, 1.33);
    CHECK(ricci_flat_residual(tj) < 1e-12);
    TriadJet<double> tk = flow_jets(0.83, 0.61, 1.91);
    CHECK(ricci_flat_residual(tk) < 1e-12);
}

}  // TEST_SUITE
