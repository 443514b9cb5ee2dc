#include "spin7/flow.hpp"

#include <cmath>

namespace spin7 {

namespace {

// partial derivatives of a scalar F(a,b,c) via 1-jets, one seed at a time
template <class F>
std::array<double, 3> log_gradient(F&& f, double a, double b, double c) {
    using J = Jet1<double>;
    J fa = f(J(a, 1.0), J(b), J(c));
    J fb = f(J(a), J(b, 1.0), J(c));
    J fc = f(J(a), J(b), J(c, 1.0));
    return {a * fa.d, b * fb.d, c * fc.d};
}

std::array<double, 3> apply_g_inv(const std::array<double, 3>& p) {
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += KINETIC_G_INV[i][j] * p[j];
    return out;
}

}  // namespace

std::array<double, 3> superpotential_log_gradient(double a, double b, double c) {
    return log_gradient([](auto x, auto y, auto z) { return superpotential(x, y, z); }, a,
                        b, c);
}

double superpotential_residual(double a, double b, double c) {
    auto p = superpotential_log_gradient(a, b, c);
    auto gp = apply_g_inv(p);
    double quad = 0.0;
    for (int i = 0; i < 3; ++i) quad += p[i] * gp[i];
    double V = potential(a, b, c);
    return std::fabs(V + 0.5 * quad) / std::fabs(V);
}

std::array<double, 3> gradient_flow_rates(double a, double b, double c) {
    auto gp = apply_g_inv(superpotential_log_gradient(a, b, c));
    double mu = a * a * b * std::pow(c, 4);  // dt = mu d eta
    return {a * gp[0] / mu, b * gp[1] / mu, c * gp[2] / mu};
}

double energy_residual(double a, double b, double c) {
    auto r = flow_rhs(a, b, c);
    // eta-velocities of the log coordinates
    double mu = a * a * b * std::pow(c, 4);
    std::array<double, 3> xp = {mu * r[0] / a, mu * r[1] / b, mu * r[2] / c};
    double kin = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) kin += 0.5 * KINETIC_G[i][j] * xp[i] * xp[j];
    double V = potential(a, b, c);
    return std::fabs(kin + V) / (std::fabs(kin) + std::fabs(V));
}

std::array<double, 3> euler_lagrange_residual(const TriadJet<double>& tr) {
    double a = tr.a, b = tr.b, c = tr.c;
    double mu = a * a * b * std::pow(c, 4);
    double mu_dot = 2.0 * a * tr.da * b * std::pow(c, 4) + a * a * tr.db * std::pow(c, 4) +
                    4.0 * a * a * b * std::pow(c, 3) * tr.dc;
    // x' = mu xdot, x'' = mu (mu_dot xdot + mu xddot), with x = log of the triad
    std::array<double, 3> xd = {tr.da / a, tr.db / b, tr.dc / c};
    std::array<double, 3> xdd = {tr.d2a / a - xd[0] * xd[0], tr.d2b / b - xd[1] * xd[1],
                                 tr.d2c / c - xd[2] * xd[2]};
    std::array<double, 3> xpp{};
    for (int i = 0; i < 3; ++i) xpp[i] = mu * (mu_dot * xd[i] + mu * xdd[i]);

    auto vgrad = log_gradient([](auto x, auto y, auto z) { return potential(x, y, z); },
                              a, b, c);
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        double inertial = 0.0;
        for (int j = 0; j < 3; ++j) inertial += KINETIC_G[i][j] * xpp[j];
        double denom = std::fabs(inertial) + std::fabs(vgrad[i]) + 1e-300;
        out[i] = std::fabs(inertial + vgrad[i]) / denom;
    }
    return out;
}

std::vector<FlowState> integrate_flow(const FlowState& start, double t_end,
                                      double rel_tol) {
    auto rhs = [](double, const std::array<double, 3>& y) {
        return flow_rhs(y[0], y[1], y[2]);
    };
    auto res = integrate_ode<3>(rhs, {start.a, start.b, start.c}, start.t, t_end, rel_tol);
    std::vector<FlowState> out;
    out.reserve(res.t.size());
    for (std::size_t i = 0; i < res.t.size(); ++i)
        out.push_back({res.t[i], res.y[i][0], res.y[i][1], res.y[i][2]});
    return out;
}

std::vector<TruncationReport> truncation_report() {
    std::vector<TruncationReport> out;
    const double probes[][2] = {{0.7, 1.3}, {1.9, 0.8}, {0.33, 2.6}, {1.2, 1.2}};

    double worst_ab = 0.0;
    for (auto [a, c] : probes) {
        auto r = flow_rhs(a, a, c);
        worst_ab = std::max(worst_ab, std::fabs(r[0] - r[1]));
    }
    out.push_back({"a=b", worst_ab < 1e-14,
                   "invariant plane; the two-function cone solution lives here"});

    double worst_b0 = 0.0;
    for (auto [a, c] : probes)
        worst_b0 = std::max(worst_b0, std::fabs(flow_rhs(a, 0.0, c)[1]));
    out.push_back({"b=0", worst_b0 < 1e-14,
                   "invariant plane; the fibre circle degenerates"});

    double worst_bma = 0.0, worst_bma_ac = 0.0;
    for (auto [a, c] : probes) {
        auto r = flow_rhs(a, -a, c);
        worst_bma = std::max(worst_bma, std::fabs(r[1] + r[0]));
        auto rq = flow_rhs(a, -a, a);
        worst_bma_ac = std::max(worst_bma_ac, std::fabs(rq[1] + rq[0]));
    }
    out.push_back({"b=-a", worst_bma < 1e-14,
                   worst_bma_ac < 1e-14
                       ? "not invariant alone; joined with a=c it closes and gives the flat cone"
                       : "not invariant"});

    double worst_ac = 0.0;
    for (auto [a, b] : probes) {
        auto r = flow_rhs(a, b, a);
        worst_ac = std::max(worst_ac, std::fabs(r[2] - r[0]));
    }
    out.push_back({"a=c", worst_ac < 1e-14,
                   "inconsistent at first order (forces b=-a, hence flat); genuine a=c "
                   "solutions exist only for the second-order equations"});
    return out;
}

}  // namespace spin7
