#include "spin7/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spin7/clifford.hpp"
#include "spin7/closed_form.hpp"
#include "spin7/curvature.hpp"
#include "spin7/families.hpp"
#include "spin7/flow.hpp"
#include "spin7/harmonic.hpp"
#include "spin7/ode.hpp"
#include "spin7/sweep.hpp"

namespace spin7 {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// ---- criterion 1: the superpotential identity ------------------------------

CriterionResult criterion_superpotential() {
    RandomStream rng(20240801);
    double worst_id = 0, worst_grad = 0;
    for (int i = 0; i < 1000; ++i) {
        double a = std::exp(std::log(0.2) + rng.uniform() * std::log(25.0));
        double c = std::exp(std::log(0.2) + rng.uniform() * std::log(25.0));
        double b = std::exp(std::log(0.2) + rng.uniform() * std::log(25.0));
        if (rng.uniform() < 0.5) b = -b;
        worst_id = std::max(worst_id, superpotential_residual(a, b, c));
        auto g = gradient_flow_rates(a, b, c);
        auto f = flow_rhs(a, b, c);
        double scale = std::max({std::fabs(f[0]), std::fabs(f[1]), std::fabs(f[2]), 1.0});
        for (int j = 0; j < 3; ++j)
            worst_grad = std::max(worst_grad, std::fabs(g[j] - f[j]) / scale);
    }
    CriterionResult r{1, "superpotential identity", worst_id < 1e-10,
                      "max |V + (1/2) dW.g^-1.dW| / |V| = " + fmt6(worst_id) +
                          " over 1000 random triads (tol 1e-10); gradient vs flow mismatch " +
                          fmt6(worst_grad)};
    return r;
}

// ---- criterion 2: flow trajectories are Ricci-flat -------------------------

CriterionResult criterion_flow_ricci() {
    std::vector<std::array<double, 3>> seeds = {
        {1.1180339887498948, -0.74535599249992989, 1.2247448713915890},  // nut family
        {0.75, 0.6, 2.3717082451262845},                                 // bolt family
    };
    RandomStream rng(77001);
    for (int i = 0; i < 5; ++i) {
        double a = 0.9 + 0.7 * rng.uniform();
        double c = 1.0 + 1.0 * rng.uniform();
        double b = (0.4 + 0.4 * rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        seeds.push_back({a, b, c});
    }
    double worst_ricci = 0, worst_el = 0, worst_en = 0;
    std::size_t states = 0;
    for (const auto& s : seeds) {
        auto path = integrate_flow({0.0, s[0], s[1], s[2]}, 0.8, 1e-10);
        for (const auto& st : path) {
            TriadJet<double> tj = flow_jets(st.a, st.b, st.c);
            worst_ricci = std::max(worst_ricci, ricci_flat_residual(tj));
            auto el = euler_lagrange_residual(tj);
            worst_el = std::max({worst_el, el[0], el[1], el[2]});
            worst_en = std::max(worst_en, energy_residual(st.a, st.b, st.c));
            ++states;
        }
    }
    bool pass = worst_ricci < 1e-8 && worst_el < 1e-8;
    CriterionResult r{2, "flow implies Ricci-flat", pass,
                      "max |Ricci| = " + fmt6(worst_ricci) + ", max EL residual = " +
                          fmt6(worst_el) + ", max energy residual = " + fmt6(worst_en) +
                          " over " + std::to_string(states) +
                          " accepted states, 7 seeds (tol 1e-8)"};
    return r;
}

// ---- criterion 3: closed-form triads satisfy the flow ----------------------

CriterionResult criterion_chart_triads() {
    double worst = 0;
    auto check = [&worst](const TriadJet<double>& tj) {
        auto f = flow_rhs(tj.a, tj.b, tj.c);
        worst = std::max({worst, std::fabs(f[0] - tj.da), std::fabs(f[1] - tj.db),
                          std::fabs(f[2] - tj.dc)});
    };
    double z0 = bolt_z(1.0);
    double g_hi = (1.0 - z0) * 0.9, g_lo = 1e-3;
    for (int i = 0; i < 100; ++i) {
        double gap = g_hi * std::pow(g_lo / g_hi, i / 99.0);
        check(triad_from_zv_gap(gap, 1.0, 1.0));
    }
    double y0 = bolt_y(0.0);
    double y_lo = y0 + 0.01, y_hi = 0.995;
    for (int i = 0; i < 100; ++i) {
        double y = y_lo + (y_hi - y_lo) * i / 99.0;
        check(triad_from_y(y, 0.0, 1.0));
    }
    CriterionResult r{3, "closed-form triads satisfy the flow", worst < 1e-12,
                      "max flow residual " + fmt6(worst) +
                          " over 100 z-chart and 100 y-chart points (tol 1e-12)"};
    return r;
}

// ---- criterion 4: elementary profiles --------------------------------------

CriterionResult criterion_elementary() {
    bool ok = true;
    std::ostringstream note;
    for (const Rational& r : {Rational(1), Rational(2), Rational(7, 3)}) {
        // f = -r: conserved quantity 8, the flat cone
        std::array<Rational, 4> flat = {-r, Rational(-1), Rational(0), Rational(0)};
        ok = ok && radial_ode_lhs(flat) == 0 &&
             q_from_f<Rational>({flat[0], flat[1], flat[2]}) == 8;
        // f = 3r: conserved quantity 0, the spin-bundle cone
        std::array<Rational, 4> bs = {3 * r, Rational(3), Rational(0), Rational(0)};
        ok = ok && radial_ode_lhs(bs) == 0 &&
             q_from_f<Rational>({bs[0], bs[1], bs[2]}) == 0;
        // f = r + r^2/2: the nut/bolt pair at unit scale
        std::array<Rational, 4> nb = {r + r * r / 2, 1 + r, Rational(1), Rational(0)};
        ok = ok && radial_ode_lhs(nb) == 0 &&
             q_from_f<Rational>({nb[0], nb[1], nb[2]}) == 2 * r * r;
    }
    note << "radial equation exact on the three elementary profiles";

    // spin-bundle coefficients on rational points of the parametrisation
    bool bs_ok = true;
    using JR = Jet1<Rational>;
    for (const Rational& u : {Rational(2), Rational(5, 2), Rational(3)}) {
        FamilySquares sq = MetricFamily::spin_bundle_squares_param(u, Rational(1));
        Rational u10 = u;
        for (int i = 0; i < 9; ++i) u10 *= u;
        Rational w = Rational(1) - Rational(1) / u10;
        Rational r = u * u * u;
        bs_ok = bs_ok && sq.g_rr * w == 1 && sq.coef_R12 == sq.coef_R3 &&
                sq.coef_S4 == Rational(9, 20) * r * r;

        // squared first-order equations, exact in the parameter
        JR uj(u, Rational(1));
        JR rj = uj * uj * uj;
        JR u10j = uj;
        for (int i = 0; i < 9; ++i) u10j = u10j * uj;
        JR wj = JR(Rational(1)) - JR(Rational(1)) / u10j;
        JR a2 = JR(Rational(9, 100)) * rj * rj * wj;
        JR c2 = JR(Rational(9, 20)) * rj * rj;
        Rational drdu = 3 * u * u;
        Rational a2p = a2.d / drdu, c2p = c2.d / drdu;
        Rational lhs_a = a2p * a2p * w;
        Rational target = Rational(1) - 2 * a2.v / c2.v;
        Rational rhs_a = a2.v * target * target;
        Rational lhs_c = c2p * c2p * w;
        Rational rhs_c = 9 * a2.v;
        bs_ok = bs_ok && lhs_a == rhs_a && lhs_c == rhs_c;
    }
    note << "; spin-bundle coefficients and squared flow exact at rational points";
    CriterionResult r{4, "elementary profiles", ok && bs_ok, note.str()};
    return r;
}

// ---- criterion 5: the v equation and its first integrals -------------------

CriterionResult criterion_v_equation() {
    double worst_ode = 0;
    for (double k : {0.3, 1.0, 3.0}) {
        for (int i = 0; i < 20; ++i) {
            double z = 0.05 + 0.85 * i / 19.0;
            worst_ode = std::max(worst_ode, v_ode_residual_z(z, k, 1e-5));
        }
        for (int i = 0; i < 20; ++i) {
            double gap = 0.1 * std::pow(1e-2, i / 19.0);
            worst_ode = std::max(worst_ode, v_ode_residual_z(1.0 - gap, k, 1e-6));
        }
    }
    for (double kap : {-1.5, 0.0, 1.5})
        for (int i = 0; i < 40; ++i) {
            double y = -0.95 + 1.9 * i / 39.0;
            worst_ode = std::max(worst_ode, v_ode_residual_y(y, kap, 1e-5));
        }

    // transporting v by its equation reproduces the closed form
    auto rhs_z = [](double z, const std::array<double, 1>& v) {
        return std::array<double, 1>{(v[0] + 2.0 * z) / (2.0 * z * (1.0 - z * z))};
    };
    auto rz = integrate_ode<1>(rhs_z, {v_of_z(0.2, 1.0)}, 0.2, 0.95, 1e-12, 1e-14);
    double err_z = std::fabs(rz.y.back()[0] - v_of_z(0.95, 1.0));
    auto rhs_y = [](double y, const std::array<double, 1>& v) {
        return std::array<double, 1>{(y * v[0] + 2.0) / (2.0 * (1.0 - y * y))};
    };
    auto ry = integrate_ode<1>(rhs_y, {v_of_y(-0.5, 0.0)}, -0.5, 0.85, 1e-12, 1e-14);
    double err_y = std::fabs(ry.y.back()[0] - v_of_y(0.85, 0.0));

    // bolt identities: v' at the bolt is pinned by the equation
    auto stencil = [](auto f, double x, double h) {
        return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
    };
    double z0 = bolt_z(1.0);
    double vpz = stencil([](double z) { return v_of_z(z, 1.0); }, z0, 1e-5);
    double bolt_rel_z = std::fabs(z0 * (1.0 - z0) * vpz - 1.0);
    double y0 = bolt_y(0.0);
    double vpy = stencil([](double y) { return v_of_y(y, 0.0); }, y0, 1e-5);
    double bolt_rel_y = std::fabs((1.0 - y0) * vpy - 1.0);

    double kb_err = std::fabs(kappa_bar() - 2.6220575542921198104648396);

    double worst_fi = 0;
    for (double k : {0.3, 1.0, 3.0})
        for (double z : {0.3, 0.7, 0.95})
            worst_fi = std::max(worst_fi, std::fabs(first_integral_k(z, v_of_z(z, k)) - k));
    for (double kap : {-1.5, 0.0, 1.5})
        for (double y : {-0.5, 0.0, 0.8})
            worst_fi = std::max(worst_fi,
                                std::fabs(first_integral_kappa(y, v_of_y(y, kap)) - kap));

    bool pass = worst_ode < 1e-9 && err_z < 1e-8 && err_y < 1e-8 &&
                bolt_rel_z < 1e-10 && bolt_rel_y < 1e-10 && kb_err < 1e-10 &&
                worst_fi < 1e-10;
    CriterionResult r{5, "v equation and first integrals", pass,
                      "ODE residual " + fmt6(worst_ode) + " (tol 1e-9); transport error z " +
                          fmt6(err_z) + ", y " + fmt6(err_y) + " (tol 1e-8); bolt identity " +
                          fmt6(std::max(bolt_rel_z, bolt_rel_y)) + " (tol 1e-10); kappa_bar err " +
                          fmt6(kb_err) + "; first integrals " + fmt6(worst_fi)};
    return r;
}

// ---- criterion 6: boundary limits of the general solution ------------------

CriterionResult criterion_limits() {
    // small-k limit degenerates to the bolt family
    double eps = 0.01;
    double k = std::pow(2.0, 0.25) * eps;
    double f_norm = 2.0 * eps * eps;
    MetricFamily bolt(Family::B8);
    double worst_eps = 0;
    for (int i = 0; i < 20; ++i) {
        double r = 3.5 * std::pow(40.0 / 3.5, i / 19.0);
        double e4 = eps * eps * eps * eps;
        double p = (r + 1.0);
        double gap = 16.0 * e4 / (p * p * p * p);
        MetricPointZV m = metric_from_zv_gap(gap, k, f_norm);
        MetricSample s = bolt.sample(r);
        double dzdr = 64.0 * e4 / (p * p * p * p * p);
        worst_eps = std::max({worst_eps, std::fabs(m.coef_S4 / s.coef_S4 - 1.0),
                              std::fabs(m.coef_R12 / s.coef_R12 - 1.0),
                              std::fabs(m.coef_R3 / s.coef_R3 - 1.0),
                              std::fabs(m.g_chart * dzdr * dzdr / s.g_rr - 1.0)});
    }

    // large-k limit reproduces the circle-fibred cone over the 3-form cone
    double K = 1e7;
    double worst_k = 0;
    for (int i = 0; i < 20; ++i) {
        double z = 0.1 + 0.88 * i / 19.0;
        MetricPointZV m = metric_from_zv_gap(1.0 - z, K, std::sqrt(2.0));
        double r = std::pow((1.0 + z) / (1.0 - z), 0.25);
        double r2 = r * r, r4 = r2 * r2;
        double drdz = r / (2.0 * (1.0 - z * z));
        worst_k = std::max({worst_k, std::fabs(K * K * m.coef_R3 / 4.0 - 1.0),
                            std::fabs(m.coef_S4 / r2 - 1.0),
                            std::fabs(m.coef_R12 / (2.0 * (r4 - 1.0) / r2) - 1.0),
                            std::fabs(m.g_chart / (drdz * drdz * (1.0 + z) / z) - 1.0)});
    }
    bool pass = worst_eps < 1e-6 && worst_k < 1e-6;
    CriterionResult r{6, "boundary limits of the general solution", pass,
                      "small-k vs bolt family " + fmt6(worst_eps) + ", large-k vs circle cone " +
                          fmt6(worst_k) + " (tol 1e-6, 20 radii each)"};
    return r;
}

// ---- criterion 7: invariant spinor and structure operators -----------------

CriterionResult criterion_spinor() {
    std::ostringstream note;
    int ac = anticommutator_defect();
    bool spinor_ok = true;
    double ann = 1;
    try {
        ann = max_annihilation_residual();  // also asserts the kernel is a line
    } catch (const std::exception&) {
        spinor_ok = false;
    }
    double worst_dirac = 0;
    for (auto [fam, r] : {std::pair{Family::A8, 2.5}, {Family::B8, 4.2},
                          {Family::SpinBundle, 1.7}}) {
        MetricSample s = MetricFamily(fam).sample(r);
        worst_dirac = std::max(worst_dirac, spinor_derivative_residual(s.triad));
    }

    Form<double> phi = cayley_form();
    bool legible = phi.size() == 14;
    for (const auto& [m, c] : phi) legible = legible && std::fabs(std::fabs(c) - 1.0) < 1e-12;
    double sd = max_abs_coef(star_frame(phi) - phi);

    double worst_dphi = 0;
    for (auto [fam, r] : {std::pair{Family::A8, 2.5}, {Family::B8, 4.2},
                          {Family::SpinBundle, 1.7}}) {
        MetricSample s = MetricFamily(fam).sample(r);
        Form<Jet1<double>> phij;
        for (const auto& [m, c] : phi) phij.emplace(m, Jet1<double>(c, 0.0));
        auto scales = frame_scales_jet(s.triad);
        Form<double> dphi = d_t(frame_to_coframe(phij, scales));
        worst_dphi = std::max(worst_dphi, max_abs_coef(dphi));
    }

    // closing the 4-form forces exactly the flow
    double a = 1.1, b = -0.7, c = 1.3;
    auto dphi_of = [&](double da, double db, double dc) {
        TriadJet<double> tr;
        tr.a = a; tr.b = b; tr.c = c;
        tr.da = da; tr.db = db; tr.dc = dc;
        tr.d2a = tr.d2b = tr.d2c = 0;
        Form<Jet1<double>> phij;
        for (const auto& [m, cc] : phi) phij.emplace(m, Jet1<double>(cc, 0.0));
        return d_t(frame_to_coframe(phij, frame_scales_jet(tr)));
    };
    Form<double> d0 = dphi_of(0, 0, 0);
    std::array<Form<double>, 3> cols = {dphi_of(1, 0, 0) - d0, dphi_of(0, 1, 0) - d0,
                                        dphi_of(0, 0, 1) - d0};
    std::map<Mask, int> rows;
    for (const auto& [m, v] : d0) rows.emplace(m, 0);
    for (const auto& col : cols)
        for (const auto& [m, v] : col) rows.emplace(m, 0);
    double AtA[3][3] = {}, Atb[3] = {};
    for (const auto& [m, unused] : rows) {
        double row[3], rhs = 0;
        for (int j = 0; j < 3; ++j) {
            auto it = cols[j].find(m);
            row[j] = it == cols[j].end() ? 0.0 : it->second;
        }
        auto it0 = d0.find(m);
        rhs = -(it0 == d0.end() ? 0.0 : it0->second);
        for (int p = 0; p < 3; ++p) {
            Atb[p] += row[p] * rhs;
            for (int q = 0; q < 3; ++q) AtA[p][q] += row[p] * row[q];
        }
    }
    double det = AtA[0][0] * (AtA[1][1] * AtA[2][2] - AtA[1][2] * AtA[2][1]) -
                 AtA[0][1] * (AtA[1][0] * AtA[2][2] - AtA[1][2] * AtA[2][0]) +
                 AtA[0][2] * (AtA[1][0] * AtA[2][1] - AtA[1][1] * AtA[2][0]);
    auto solve3 = [&](int idx) {
        double M[3][3];
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q) M[p][q] = q == idx ? Atb[p] : AtA[p][q];
        double dd = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                    M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                    M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        return dd / det;
    };
    std::array<double, 3> xsol = {solve3(0), solve3(1), solve3(2)};
    auto fr = flow_rhs(a, b, c);
    double recover = std::max({std::fabs(xsol[0] - fr[0]), std::fabs(xsol[1] - fr[1]),
                               std::fabs(xsol[2] - fr[2])});
    double resid = 0;
    for (const auto& [m, unused] : rows) {
        double acc = 0;
        for (int j = 0; j < 3; ++j) {
            auto it = cols[j].find(m);
            acc += (it == cols[j].end() ? 0.0 : it->second) * xsol[j];
        }
        auto it0 = d0.find(m);
        acc += it0 == d0.end() ? 0.0 : it0->second;
        resid = std::max(resid, std::fabs(acc));
    }

    bool pass = ac == 0 && spinor_ok && ann < 1e-12 && worst_dirac < 1e-12 && legible &&
                sd < 1e-12 && worst_dphi < 1e-10 && recover < 1e-10 && resid < 1e-10 &&
                std::fabs(det) > 1e-12;
    note << "anticommutators exact (defect " << ac << "); kernel is a line; annihilation "
         << fmt6(ann) << "; derivative operators on flow triads " << fmt6(worst_dirac)
         << "; 4-form has 14 unit coefficients, self-duality defect " << fmt6(sd)
         << "; d(form) on flow triads " << fmt6(worst_dphi)
         << "; closure forces the flow back (mismatch " << fmt6(recover)
         << ", system residual " << fmt6(resid) << ", normal determinant " << fmt6(det) << ")";
    CriterionResult r{7, "invariant spinor and structure operators", pass, note.str()};
    return r;
}

// ---- criterion 8: calibration bound -----------------------------------------

CriterionResult criterion_calibration() {
    Form<double> phi = cayley_form();
    auto unit_plane = [](int i, int j, int k, int l) {
        std::array<std::array<double, 8>, 4> X{};
        X[0][i] = 1; X[1][j] = 1; X[2][k] = 1; X[3][l] = 1;
        return X;
    };
    double v_base = form_on_vectors(phi, unit_plane(0, 1, 2, 3));
    double v_fibre = form_on_vectors(phi, unit_plane(4, 5, 6, 7));
    double e1 = std::fabs(std::fabs(v_base) - 1.0);
    double e2 = std::fabs(std::fabs(v_fibre) - 1.0);

    CalibrationScan serial = calibration_scan(100000, 4242, false);
    CalibrationScan par = calibration_scan(100000, 4242, true);
    bool agree = serial.max_value == par.max_value && serial.argmax == par.argmax;
    bool bound = serial.max_value <= 1.0 + 1e-9;

    bool pass = e1 < 1e-12 && e2 < 1e-12 && agree && bound;
    CriterionResult r{8, "calibration bound", pass,
                      "coordinate 4-planes evaluate to " + fmt(v_base) + " and " + fmt(v_fibre) +
                          " (unit magnitude, sign tracks orientation); max over 1e5 random "
                          "planes " + fmt(serial.max_value) + " at index " +
                          std::to_string(serial.argmax) +
                          (agree ? "; parallel scan identical" : "; PARALLEL SCAN DIFFERS")};
    return r;
}

// ---- criterion 9: harmonic profiles -----------------------------------------

CriterionResult criterion_harmonic_profiles() {
    double worst_sys = 0;
    for (int i = 0; i < 100; ++i) {
        double r = 1.02 * std::pow(40.0 / 1.02, i / 99.0);
        worst_sys = std::max(worst_sys,
                             profile_system_residual(Family::A8, DualityLabel::Minus, r));
    }
    for (int i = 0; i < 100; ++i) {
        double r = 3.02 * std::pow(40.0 / 3.02, i / 99.0);
        worst_sys = std::max(worst_sys,
                             profile_system_residual(Family::B8, DualityLabel::Minus, r));
        worst_sys = std::max(worst_sys,
                             profile_system_residual(Family::B8, DualityLabel::Plus, r));
    }

    bool exact_ok = true;
    for (const Rational& r : {Rational(2), Rational(7, 3), Rational(3), Rational(5)}) {
        auto u = middle_form_profile<Rational>(Family::A8, DualityLabel::Minus, r);
        exact_ok = exact_ok &&
                   profile_norm_squared(u) == norm_polynomial(Family::A8, DualityLabel::Minus, r);
    }
    for (const Rational& r : {Rational(4), Rational(9, 2), Rational(5), Rational(7)}) {
        for (auto lab : {DualityLabel::Minus, DualityLabel::Plus}) {
            auto u = middle_form_profile<Rational>(Family::B8, lab, r);
            exact_ok = exact_ok &&
                       profile_norm_squared(u) == norm_polynomial(Family::B8, lab, r);
        }
    }

    // the invariant 4-form itself is the constant member of the family
    double worst_cayley = 0;
    std::array<double, 3> uc = {-1.0, -1.0, 1.0};
    for (auto [fam, r] : {std::pair{Family::A8, 2.5}, {Family::B8, 4.2},
                          {Family::SpinBundle, 1.7}}) {
        MetricSample s = MetricFamily(fam).sample(r);
        auto du = middle_form_rate<double>(uc, +1, s.triad);
        worst_cayley = std::max({worst_cayley, std::fabs(du[0]), std::fabs(du[1]),
                                 std::fabs(du[2])});
    }
    Form<double> diff = middle_form(uc, +1) - cayley_form();
    double cayley_match = max_abs_coef(diff);

    double eig_err = 0;
    {
        auto u1 = middle_form_profile<double>(Family::A8, DualityLabel::Minus, 2.0);
        eig_err = std::max(eig_err, std::fabs(hodge_eigenvalue(middle_form(u1, +1)) - 1.0));
        auto u2 = middle_form_profile<double>(Family::B8, DualityLabel::Plus, 4.0);
        eig_err = std::max(eig_err, std::fabs(hodge_eigenvalue(middle_form(u2, -1)) + 1.0));
    }

    auto p1 = relation_probe(Family::A8, DualityLabel::Minus);
    auto p2 = relation_probe(Family::B8, DualityLabel::Minus);
    auto p3 = relation_probe(Family::B8, DualityLabel::Plus);
    bool rel_ok = p1.has_relation && p2.has_relation && !p3.has_relation;

    bool pass = worst_sys < 1e-10 && exact_ok && worst_cayley < 1e-13 &&
                cayley_match < 1e-12 && eig_err < 1e-12 && rel_ok;
    std::ostringstream note;
    note << "system residual " << fmt6(worst_sys) << " over 300 radii (tol 1e-10); norms match "
         << "the rational expressions exactly: " << (exact_ok ? "yes" : "NO")
         << "; constant member is stationary to " << fmt6(worst_cayley)
         << " and rebuilds the invariant 4-form to " << fmt6(cayley_match)
         << "; star eigenvalues off by " << fmt6(eig_err) << "; pointwise relations: ";
    if (p1.has_relation)
        note << "[" << p1.coeffs[0] << "," << p1.coeffs[1] << "," << p1.coeffs[2] << "]";
    note << " / ";
    if (p2.has_relation)
        note << "[" << p2.coeffs[0] << "," << p2.coeffs[1] << "," << p2.coeffs[2] << "]";
    note << " / " << (p3.has_relation ? "unexpected relation" : "full rank");
    CriterionResult r{9, "harmonic profiles", pass, note.str()};
    return r;
}

// ---- criterion 10: L2 integrals ---------------------------------------------

CriterionResult criterion_l2() {
    double i_nut = l2_norm_integral(Family::A8, DualityLabel::Minus);
    double i_bm = l2_norm_integral(Family::B8, DualityLabel::Minus);
    double i_bp = l2_norm_integral(Family::B8, DualityLabel::Plus);
    double cal = (9.0 / 4.0) / i_nut;
    double e1 = std::fabs(cal * i_bm / (189.0 / 16.0) - 1.0);
    double e2 = std::fabs(cal * i_bp / (189.0 / 4.0) - 1.0);
    double er = std::fabs(i_bp / i_bm / 4.0 - 1.0);
    bool pass = e1 < 1e-6 && e2 < 1e-6 && er < 1e-9;
    CriterionResult r{10, "L2 integrals", pass,
                      "calibrated on the nut family to 9/4 (constant " + fmt(cal) +
                          "); bolt integrals off by " + fmt6(e1) + " and " + fmt6(e2) +
                          " (tol 1e-6); ratio off 4 by " + fmt6(er) + " (tol 1e-9)"};
    return r;
}

// ---- criterion 11: potential 3-form -----------------------------------------

CriterionResult criterion_b3() {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double r = 1.01 * std::pow(50.0 / 1.01, i / 99.0);
        worst = std::max(worst, b3_closure_residual(r));
    }
    double og = b3_vanishing_order_in_gap();
    double oa = b3_vanishing_order_in_arclength();
    bool pass = worst < 1e-10 && std::fabs(oa - 2.0) < 0.05;
    CriterionResult r{11, "potential 3-form", pass,
                      "max |dB - G| = " + fmt6(worst) +
                          " over 100 radii (tol 1e-10); |B|^2 vanishing order " + fmt(oa) +
                          " in arc length (target 2 +- 0.05) = order " + fmt(og) +
                          " in the coordinate gap, which is quadratic only in arc length"};
    return r;
}

// ---- criterion 12: collapse exponents ----------------------------------------

CriterionResult criterion_collapse() {
    BoltData nut = MetricFamily(Family::A8).bolt_data();
    BoltData bolt = MetricFamily(Family::B8).bolt_data();
    double worst = 0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(nut.exponents[i] - 1.0));
    for (int i = 0; i < 2; ++i) worst = std::max(worst, std::fabs(bolt.exponents[i] - 1.0));
    bool pass = worst < 1e-3;
    CriterionResult r{12, "collapse exponents", pass,
                      "fitted vanishing exponents: nut (" + fmt(nut.exponents[0]) + ", " +
                          fmt(nut.exponents[1]) + ", " + fmt(nut.exponents[2]) + "), bolt (" +
                          fmt(bolt.exponents[0]) + ", " + fmt(bolt.exponents[1]) +
                          ", last direction stays at " + fmt(bolt.s4_radius_sq) +
                          "); max deviation " + fmt6(worst) + " (tol 1e-3)"};
    return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
    switch (id) {
        case 1: return criterion_superpotential();
        case 2: return criterion_flow_ricci();
        case 3: return criterion_chart_triads();
        case 4: return criterion_elementary();
        case 5: return criterion_v_equation();
        case 6: return criterion_limits();
        case 7: return criterion_spinor();
        case 8: return criterion_calibration();
        case 9: return criterion_harmonic_profiles();
        case 10: return criterion_l2();
        case 11: return criterion_b3();
        case 12: return criterion_collapse();
        default: throw std::out_of_range("criterion id must be 1..12");
    }
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id));
    return out;
}

MutationCheck run_mutation_check() {
    // flip one sign in the flow and confirm the gates notice
    auto mutated = [](double a, double b, double c) {
        return std::array<double, 3>{1.0 - b / (2.0 * a) + a * a / (c * c),
                                     b * b / (2.0 * a * a) - b * b / (c * c),
                                     a / c + b / (2.0 * c)};
    };
    RandomStream rng(555);
    double mismatch = 0;
    for (int i = 0; i < 50; ++i) {
        double a = 0.5 + 2.0 * rng.uniform();
        double c = 0.5 + 2.0 * rng.uniform();
        double b = (0.3 + rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        auto fm = mutated(a, b, c);
        auto gr = gradient_flow_rates(a, b, c);
        for (int j = 0; j < 3; ++j) mismatch = std::max(mismatch, std::fabs(fm[j] - gr[j]));
    }

    auto mutated_jets = [&](double a, double b, double c) {
        auto r = mutated(a, b, c);
        using J = Jet1<double>;
        J aj(a, r[0]), bj(b, r[1]), cj(c, r[2]);
        std::array<J, 3> rj = {J(1.0) - bj / (J(2.0) * aj) + aj * aj / (cj * cj),
                               bj * bj / (J(2.0) * aj * aj) - bj * bj / (cj * cj),
                               aj / cj + bj / (J(2.0) * cj)};
        TriadJet<double> out;
        out.a = a; out.b = b; out.c = c;
        out.da = r[0]; out.db = r[1]; out.dc = r[2];
        out.d2a = rj[0].d; out.d2b = rj[1].d; out.d2c = rj[2].d;
        return out;
    };
    double ricci = 0;
    for (auto [a, b, c] : {std::array<double, 3>{1.1180339887498948, -0.74535599249992989,
                                                 1.2247448713915890},
                           {1.0, -0.6, 1.2}, {0.9, 0.5, 1.4}}) {
        ricci = std::max(ricci, ricci_flat_residual(mutated_jets(a, b, c)));
    }
    return {mismatch, ricci, mismatch > 1e-3 && ricci > 1e-3};
}

std::string acceptance_report_json() {
    auto t0 = std::chrono::steady_clock::now();
    auto results = run_acceptance();
    MutationCheck mc = run_mutation_check();
    auto t1 = std::chrono::steady_clock::now();

    nlohmann::json j;
    j["criteria"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        j["criteria"].push_back({{"id", r.id},
                                 {"label", r.label},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
        all = all && r.pass;
    }
    j["mutation_check"] = {{"gradient_mismatch", mc.gradient_mismatch},
                           {"ricci_residual", mc.ricci_residual},
                           {"detected", mc.detected}};
    j["all_pass"] = all;
    j["runtime_seconds"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() / 1000.0;
    return j.dump(2);
}

}  // namespace spin7
