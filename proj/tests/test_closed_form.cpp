#include <cmath>

#include "doctest.h"
#include "spin7/closed_form.hpp"
#include "spin7/flow.hpp"
#include "spin7/rational.hpp"

using namespace spin7;

TEST_SUITE("closed_form") {

TEST_CASE("Q is the first integral of the radial equation, exactly") {
    // jets (f, f', f'', f''') with no relations between entries
    std::array<Rational, 4> f = {Rational(7, 5), Rational(-3, 2), Rational(2, 9),
                                 Rational(5, 7)};
    CHECK(q_identity_residual(f) == 0);
    std::array<Rational, 4> g = {Rational(-1, 3), Rational(4), Rational(0),
                                 Rational(11, 2)};
    CHECK(q_identity_residual(g) == 0);
}

TEST_CASE("bolt locations in the z chart") {
    CHECK(bolt_z(0.1) == doctest::Approx(0.9999968750107421501).epsilon(1e-12));
    CHECK(bolt_z(1.0) == doctest::Approx(0.9697880489876534899).epsilon(1e-12));
    CHECK(bolt_z(10.0) == doctest::Approx(0.01463084749785835985).epsilon(1e-12));
    double z0 = bolt_z(1.0);
    CHECK(std::fabs(v_of_z(z0, 1.0) - 2.0) < 1e-10);
}

TEST_CASE("bolt locations in the y chart") {
    CHECK(bolt_y(-1.5) == doctest::Approx(0.9969031147069619265).epsilon(1e-12));
    CHECK(bolt_y(0.0) == doctest::Approx(0.9068053075241191342).epsilon(1e-12));
    CHECK(bolt_y(1.5) == doctest::Approx(0.3982381552688222290).epsilon(1e-12));
    CHECK(std::fabs(v_of_y(bolt_y(0.0), 0.0) - 2.0) < 1e-10);
    // at kappa = kappa_bar the bolt retreats to the cone point y = -1
    CHECK(bolt_y(kappa_bar()) == doctest::Approx(-1.0));
    CHECK(kappa_bar() == doctest::Approx(2.62205755429211981).epsilon(1e-14));
}

TEST_CASE("f profile in the z chart at k = 1") {
    CHECK(f_of_z(bolt_z(1.0), 1.0, 1.0) ==
          doctest::Approx(2.8636274639745185946).epsilon(1e-11));
    CHECK(f_of_z(0.75, 1.0, 1.0) == doctest::Approx(0.21950601331974104607).epsilon(1e-11));
    CHECK(f_of_z(0.9, 1.0, 1.0) == doctest::Approx(0.98317240410277161574).epsilon(1e-11));
    CHECK(f_of_z(0.99, 1.0, 1.0) == doctest::Approx(6.2171838251475740080).epsilon(1e-11));
    CHECK(f_of_z_gap(1e-4, 1.0, 1.0) ==
          doctest::Approx(88.105518008574156288).epsilon(1e-11));
}

TEST_CASE("f profile in the y chart at kappa = 0") {
    CHECK(f_of_y(bolt_y(0.0), 0.0, 1.0) ==
          doctest::Approx(1.5839984298885706341).epsilon(1e-11));
    CHECK(f_of_y(0.5, 0.0, 1.0) == doctest::Approx(0.25044372278074350888).epsilon(1e-11));
    CHECK(f_of_y(0.9, 0.0, 1.0) == doctest::Approx(1.4979220776177966431).epsilon(1e-11));
}

TEST_CASE("metric coefficients in the z chart at k = 1") {
    MetricPointZV m = metric_from_zv_gap(0.02, 1.0, 1.0);
    CHECK(m.v == doctest::Approx(2.4464345590809295714).epsilon(1e-12));
    CHECK(m.g_chart == doctest::Approx(6845.1270521911574831).epsilon(1e-10));
    CHECK(m.coef_R12 == doctest::Approx(1.4010771353428075715).epsilon(1e-10));
    CHECK(m.coef_R3 == doctest::Approx(0.93638582533006604232).epsilon(1e-10));
    CHECK(m.coef_S4 == doctest::Approx(3.8780818013888973787).epsilon(1e-10));

    MetricPointZV n = metric_from_zv_gap(0.005, 1.0, 1.0);
    CHECK(n.v == doctest::Approx(4.3146799330742847784).epsilon(1e-12));
    CHECK(n.g_chart == doctest::Approx(90656.381925318162145).epsilon(1e-10));
    CHECK(n.coef_R12 == doctest::Approx(10.332115649973468831).epsilon(1e-10));
    CHECK(n.coef_R3 == doctest::Approx(2.2199954291356763946).epsilon(1e-10));
    CHECK(n.coef_S4 == doctest::Approx(9.6539873396935802826).epsilon(1e-10));
}

TEST_CASE("triads from both charts satisfy the flow and invert") {
    // gap 0.02 keeps z = 0.98 above the k = 1 bolt at z ~ 0.9698
    TriadJet<double> t1 = triad_from_zv_gap(0.02, 1.0, 1.0);
    auto f1 = flow_rhs(t1.a, t1.b, t1.c);
    CHECK(std::fabs(f1[0] - t1.da) < 1e-12);
    CHECK(std::fabs(f1[1] - t1.db) < 1e-12);
    CHECK(std::fabs(f1[2] - t1.dc) < 1e-12);
    ZV zv = zv_from_triad(t1.a, t1.b, t1.c);
    CHECK(zv.z == doctest::Approx(0.98).epsilon(1e-10));
    CHECK(zv.v == doctest::Approx(v_of_z(0.98, 1.0)).epsilon(1e-10));

    TriadJet<double> t2 = triad_from_y(0.95, 0.0, 1.0);
    auto f2 = flow_rhs(t2.a, t2.b, t2.c);
    CHECK(std::fabs(f2[0] - t2.da) < 1e-12);
    CHECK(std::fabs(f2[1] - t2.db) < 1e-12);
    CHECK(std::fabs(f2[2] - t2.dc) < 1e-12);
    // y-chart points sit beyond z = 1: zv_from_triad reports z = 1/y
    ZV zv2 = zv_from_triad(t2.a, t2.b, t2.c);
    CHECK(zv2.z == doctest::Approx(1.0 / 0.95).epsilon(1e-10));
}

TEST_CASE("classification of the four branches") {
    SolutionParams nut;
    nut.negative_v = true;
    CHECK(branch_name(classify(nut).branch) == "A8");

    SolutionParams bolt;
    CHECK(branch_name(classify(bolt).branch) == "B8");

    SolutionParams minus;
    minus.k = 1.0;
    Classification cm = classify(minus);
    CHECK(branch_name(cm.branch) == "B8minus");
    CHECK(cm.bolt_coord == doctest::Approx(0.9697880489876534899).epsilon(1e-12));
    CHECK(cm.circle_radius_sq == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

    SolutionParams plus;
    plus.kappa = 0.0;
    Classification cp = classify(plus);
    CHECK(branch_name(cp.branch) == "B8plus");
    CHECK(cp.bolt_coord == doctest::Approx(0.9068053075241191342).epsilon(1e-12));
    double kb = kappa_bar();
    CHECK(cp.circle_radius_sq == doctest::Approx(8.0 * std::sqrt(2.0) / (kb * kb)).epsilon(1e-12));
}

TEST_CASE("phase field reference points") {
    auto p = phase_field(0.5, 2.0);
    CHECK(p[0] == doctest::Approx(0.75));
    CHECK(p[1] == doctest::Approx(3.0));
    // the degenerate nut point is stationary
    auto q = phase_field(1.0, -2.0);
    CHECK(q[0] == 0.0);
    CHECK(q[1] == 0.0);
}

}  // TEST_SUITE
