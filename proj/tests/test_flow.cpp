#include <cmath>

#include "doctest.h"
#include "spin7/flow.hpp"
#include "spin7/sweep.hpp"

using namespace spin7;

TEST_SUITE("flow") {

TEST_CASE("rates at reference points") {
    auto r1 = flow_rhs(1.0, 1.0, 1.0);
    CHECK(r1[0] == doctest::Approx(-0.5));
    CHECK(r1[1] == doctest::Approx(-0.5));
    CHECK(r1[2] == doctest::Approx(1.5));
    auto r2 = flow_rhs(1.0, -1.0, 1.0);
    CHECK(r2[0] == doctest::Approx(0.5));
    CHECK(r2[1] == doctest::Approx(-0.5));
    CHECK(r2[2] == doctest::Approx(0.5));
}

TEST_CASE("superpotential values") {
    CHECK(superpotential(1.0, 1.0, 1.0) == doctest::Approx(9.0));
    // V = (1/2) b^2 c^4 (4a^6 + 2a^4 b^2 - 24 a^4 c^2 - 4 a^2 c^4 + b^2 c^4)
    CHECK(potential(1.0, 1.0, 1.0) == doctest::Approx(-10.5));
}

TEST_CASE("flow is the gradient of the superpotential") {
    RandomStream rng(21);
    for (int i = 0; i < 200; ++i) {
        double a = 0.3 + 2.0 * rng.uniform();
        double c = 0.3 + 2.0 * rng.uniform();
        double b = (0.2 + 1.5 * rng.uniform()) * (rng.uniform() < 0.5 ? -1 : 1);
        CHECK(superpotential_residual(a, b, c) < 1e-11);
        auto g = gradient_flow_rates(a, b, c);
        auto f = flow_rhs(a, b, c);
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(g[j] - f[j]) < 1e-11);
        // zero-energy constraint holds identically along flow directions
        CHECK(energy_residual(a, b, c) < 1e-11);
        // and so do the second-order equations
        auto el = euler_lagrange_residual(flow_jets(a, b, c));
        for (int j = 0; j < 3; ++j) CHECK(el[j] < 1e-10);
    }
}

TEST_CASE("the b = -a, a = c line is the flat cone a = t/2") {
    auto path = integrate_flow({0.0, 1.0, -1.0, 1.0}, 2.0, 1e-12);
    const auto& last = path.back();
    CHECK(last.t == doctest::Approx(2.0));
    CHECK(last.a == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(last.b == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(last.c == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("truncation survey") {
    auto rep = truncation_report();
    REQUIRE(rep.size() == 4);
    for (const auto& tr : rep) {
        if (tr.name == "a=b") CHECK(tr.first_order_consistent);
        if (tr.name == "b=0") CHECK(tr.first_order_consistent);
        if (tr.name == "b=-a") CHECK_FALSE(tr.first_order_consistent);
        if (tr.name == "a=c") CHECK_FALSE(tr.first_order_consistent);
    }
}

}  // TEST_SUITE
