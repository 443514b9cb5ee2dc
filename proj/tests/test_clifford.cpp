#include <cmath>

#include "doctest.h"
#include "spin7/clifford.hpp"
#include "spin7/families.hpp"

using namespace spin7;

TEST_SUITE("clifford") {

TEST_CASE("generators close the Clifford algebra exactly") {
    CHECK(anticommutator_defect() == 0);
}

TEST_CASE("the invariant spinor is a chirality eigenvector") {
    IVec16 eta = parallel_spinor();
    int nonzero = 0, where = -1;
    for (int i = 0; i < 16; ++i)
        if (eta[i] != 0) { ++nonzero; where = i; }
    REQUIRE(nonzero == 1);
    CHECK(where == 7);
    CHECK(eta[7] == 1);

    IMat16 chi = gamma_chirality();
    // chirality squares to one and eta sits in the -1 eigenspace
    long long diag = 0;
    for (int i = 0; i < 16; ++i) diag += chi[i][i];
    CHECK(diag == 0);  // split 8 + 8
    int val = 0;
    for (int j = 0; j < 16; ++j) val += chi[7][j] * eta[j];
    CHECK(val == -1);
}

TEST_CASE("every holonomy operator annihilates the spinor") {
    CHECK(max_annihilation_residual() == 0.0);
}

TEST_CASE("the spinor bilinear has unit coefficients") {
    Form<double> phi = cayley_form();
    REQUIRE(phi.size() == 14);
    for (const auto& [m, c] : phi) CHECK(std::fabs(c) == 1.0);
    // the fixed reference coefficients
    CHECK(cayley_coefficient(0, 1, 2, 3) == -1.0);
    CHECK(cayley_coefficient(4, 5, 6, 7) == 1.0);
    CHECK(cayley_coefficient(0, 3, 4, 5) == 1.0);
    CHECK(cayley_coefficient(0, 1, 5, 6) == 1.0);
    CHECK(cayley_coefficient(0, 1, 4, 7) == -1.0);
    CHECK(cayley_coefficient(1, 3, 4, 6) == 1.0);
    // self-dual
    CHECK(max_abs_coef(star_frame(phi) - phi) == 0.0);
}

TEST_CASE("derivative operators vanish exactly on flow triads") {
    MetricSample s = MetricFamily(Family::A8).sample(2.5);
    CHECK(spinor_derivative_residual(s.triad) < 1e-14);
    MetricSample t = MetricFamily(Family::B8).sample(4.2);
    CHECK(spinor_derivative_residual(t.triad) < 1e-14);
}

TEST_CASE("derivative operators detect an off-flow rate") {
    MetricSample s = MetricFamily(Family::A8).sample(2.5);
    TriadJet<double> tr = s.triad;
    double delta = 1e-3;
    tr.da += delta;
    // the radial operator picks up exactly delta/a on the spinor
    IVec16 eta = parallel_spinor();
    Mat16 O = covariant_derivative_operator(tr, 4);
    double n2 = 0;
    for (int i = 0; i < 16; ++i) {
        double acc = 0;
        for (int j = 0; j < 16; ++j) acc += O[i][j] * eta[j];
        n2 += acc * acc;
    }
    CHECK(std::sqrt(n2) == doctest::Approx(delta / tr.a).epsilon(1e-9));
}

TEST_CASE("form evaluation on frame planes") {
    Form<double> phi = cayley_form();
    std::array<std::array<double, 8>, 4> X{};
    X[0][0] = 1; X[1][1] = 1; X[2][2] = 1; X[3][3] = 1;
    CHECK(form_on_vectors(phi, X) == -1.0);
    // swapping two vectors flips the sign
    std::swap(X[0], X[1]);
    CHECK(form_on_vectors(phi, X) == 1.0);

    std::array<std::array<double, 8>, 4> Y{};
    Y[0][4] = 1; Y[1][5] = 1; Y[2][6] = 1; Y[3][7] = 1;
    CHECK(form_on_vectors(phi, Y) == 1.0);
}

TEST_CASE("Gram-Schmidt") {
    std::array<std::array<double, 8>, 4> X{};
    X[0] = {1, 1, 0, 0, 0, 0, 0, 0};
    X[1] = {1, 0, 1, 0, 0, 0, 0, 0};
    X[2] = {0, 0, 0, 1, 1, 0, 0, 0};
    X[3] = {0, 0, 0, 0, 1, 1, 0, 0};
    REQUIRE(orthonormalize(X));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) {
            double dot = 0;
            for (int k = 0; k < 8; ++k) dot += X[i][k] * X[j][k];
            CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
    std::array<std::array<double, 8>, 4> Z{};
    Z[0] = {1, 0, 0, 0, 0, 0, 0, 0};
    Z[1] = {1, 0, 0, 0, 0, 0, 0, 0};
    Z[2] = {0, 0, 1, 0, 0, 0, 0, 0};
    Z[3] = {0, 0, 0, 1, 0, 0, 0, 0};
    CHECK_FALSE(orthonormalize(Z));
}

}  // TEST_SUITE
