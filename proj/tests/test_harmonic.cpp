#include <cmath>

#include "doctest.h"
#include "spin7/clifford.hpp"
#include "spin7/families.hpp"
#include "spin7/harmonic.hpp"
#include "spin7/rational.hpp"

using namespace spin7;

TEST_SUITE("harmonic") {

TEST_CASE("profile values at exact radii") {
    auto u_nut = middle_form_profile<Rational>(Family::A8, DualityLabel::Minus,
                                               Rational(1));
    CHECK(u_nut[0] == Rational(1, 16));
    CHECK(u_nut[1] == Rational(-3, 64));
    CHECK(u_nut[2] == Rational(-1, 128));
    CHECK(profile_norm_squared(u_nut) == Rational(105, 256));

    auto u_bm = middle_form_profile<Rational>(Family::B8, DualityLabel::Minus,
                                              Rational(3));
    CHECK(u_bm[0] == Rational(15, 128));
    CHECK(u_bm[1] == Rational(-5, 256));
    CHECK(u_bm[2] == Rational(5, 256));
    CHECK(profile_norm_squared(u_bm) == Rational(1575, 2048));

    auto u_bp = middle_form_profile<Rational>(Family::B8, DualityLabel::Plus,
                                              Rational(3));
    CHECK(u_bp[0] == Rational(-3, 32));
    CHECK(u_bp[1] == 0);
    CHECK(u_bp[2] == 0);
    CHECK(profile_norm_squared(u_bp) == Rational(27, 64));
}

TEST_CASE("norms match the closed rational expressions exactly") {
    for (const Rational& r : {Rational(3, 2), Rational(2), Rational(5)}) {
        auto u = middle_form_profile<Rational>(Family::A8, DualityLabel::Minus, r);
        CHECK(profile_norm_squared(u) ==
              norm_polynomial(Family::A8, DualityLabel::Minus, r));
    }
    for (const Rational& r : {Rational(7, 2), Rational(4), Rational(8)}) {
        for (auto lab : {DualityLabel::Minus, DualityLabel::Plus}) {
            auto u = middle_form_profile<Rational>(Family::B8, lab, r);
            CHECK(profile_norm_squared(u) == norm_polynomial(Family::B8, lab, r));
        }
    }
}

TEST_CASE("no normalisable profile on the nut with the opposite duality") {
    CHECK_FALSE(normalisable(Family::A8, DualityLabel::Plus));
    CHECK_THROWS(middle_form_profile<double>(Family::A8, DualityLabel::Plus, 2.0));
    CHECK(normalisable(Family::A8, DualityLabel::Minus));
    CHECK(normalisable(Family::B8, DualityLabel::Plus));
}

TEST_CASE("builder sign is the star eigenvalue") {
    auto u1 = middle_form_profile<double>(Family::A8, DualityLabel::Minus, 2.0);
    CHECK(hodge_eigenvalue(middle_form(u1, +1)) == doctest::Approx(1.0).epsilon(1e-14));
    auto u2 = middle_form_profile<double>(Family::B8, DualityLabel::Plus, 4.0);
    CHECK(hodge_eigenvalue(middle_form(u2, -1)) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("the constant member rebuilds the invariant 4-form") {
    Form<double> g = middle_form({-1.0, -1.0, 1.0}, +1);
    CHECK(max_abs_coef(g - cayley_form()) == 0.0);
}

TEST_CASE("profiles solve the radial system") {
    for (double r : {1.1, 2.0, 6.0, 20.0})
        CHECK(profile_system_residual(Family::A8, DualityLabel::Minus, r) < 1e-11);
    for (double r : {3.1, 4.0, 7.0, 20.0}) {
        CHECK(profile_system_residual(Family::B8, DualityLabel::Minus, r) < 1e-11);
        CHECK(profile_system_residual(Family::B8, DualityLabel::Plus, r) < 1e-11);
    }
}

TEST_CASE("pointwise linear relations are found, not assumed") {
    auto p1 = relation_probe(Family::A8, DualityLabel::Minus);
    REQUIRE(p1.has_relation);
    CHECK(p1.coeffs[0] == 1);
    CHECK(p1.coeffs[1] == 2);
    CHECK(p1.coeffs[2] == -4);
    auto p2 = relation_probe(Family::B8, DualityLabel::Minus);
    REQUIRE(p2.has_relation);
    CHECK(p2.coeffs[0] == 1);
    CHECK(p2.coeffs[1] == 2);
    CHECK(p2.coeffs[2] == -4);
    auto p3 = relation_probe(Family::B8, DualityLabel::Plus);
    CHECK_FALSE(p3.has_relation);
}

TEST_CASE("L2 integrals against their exact values") {
    CHECK(l2_norm_integral(Family::A8, DualityLabel::Minus) ==
          doctest::Approx(9.0 / 4).epsilon(1e-8));
    CHECK(l2_norm_integral(Family::B8, DualityLabel::Minus) ==
          doctest::Approx(189.0 / 16).epsilon(1e-8));
    CHECK(l2_norm_integral(Family::B8, DualityLabel::Plus) ==
          doctest::Approx(189.0 / 4).epsilon(1e-8));
}

TEST_CASE("transport from infinity matches the closed profiles") {
    for (auto [fam, lab] : {std::pair{Family::A8, DualityLabel::Minus},
                            {Family::B8, DualityLabel::Minus},
                            {Family::B8, DualityLabel::Plus}}) {
        TransportResult tr = transport_from_infinity(fam, lab);
        CHECK(tr.l2);
        CHECK(tr.match_error < 1e-7);
        CHECK(tr.note == "matched closed form");
        CHECK(tr.matched_constant > 0);
    }
}

TEST_CASE("transport detects the non-normalisable branch") {
    TransportResult tr = transport_from_infinity(Family::A8, DualityLabel::Plus);
    CHECK_FALSE(tr.l2);
    CHECK(tr.note == "non-L2 branch detected");
}

TEST_CASE("potential 3-form: closure and exact norm") {
    for (double r : {1.2, 2.0, 5.0, 20.0})
        CHECK(b3_closure_residual(r) < 1e-12);
    // |B|^2 at r = 3 is 23/13824
    CHECK(b3_norm_squared_exact(Rational(3)) == Rational(23, 13824));
    CHECK(b3_norm_squared(1.5) ==
          doctest::Approx(0.0027556774881877762536).epsilon(1e-12));
    CHECK(b3_norm_squared(10.0) ==
          doctest::Approx(8.4888740270681952123e-5).epsilon(1e-12));
}

TEST_CASE("the potential fades at first order in r, second order in arc length") {
    CHECK(b3_vanishing_order_in_gap() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(b3_vanishing_order_in_arclength() == doctest::Approx(2.0).epsilon(1e-3));
}

}  // TEST_SUITE
