#pragma once
// First-order flow for the triad (a, b, c):
//
//   da/dt = 1 - b/(2a) - a^2/c^2
//   db/dt = b^2/(2a^2) - b^2/c^2
//   dc/dt = a/c + b/(2c)
//
// and its variational structure. In x = (log a, log b, log c) the reduced
// Lagrangian has constant kinetic metric g, potential V, and a
// superpotential W with V + 1/2 g^{ij} dW_i dW_j = 0; the flow is the
// gradient flow of W, so every solution is a Ricci-flat metric. The
// time reparametrisation between arc length t and the Lagrangian time
// eta is dt = a^2 b c^4 d eta.

#include <array>
#include <string>
#include <vector>

#include "spin7/jet.hpp"
#include "spin7/ode.hpp"

namespace spin7 {

template <class T>
std::array<T, 3> flow_rhs(const T& a, const T& b, const T& c) {
    T one(1), two(2);
    return {one - b / (two * a) - a * a / (c * c),
            b * b / (two * a * a) - b * b / (c * c),
            a / c + b / (two * c)};
}

// first and second t-derivatives on the flow, by running the rhs through
// 1-jet arithmetic
template <class T>
TriadJet<T> flow_jets(const T& a, const T& b, const T& c) {
    auto r = flow_rhs(a, b, c);
    auto rj = flow_rhs(Jet1<T>(a, r[0]), Jet1<T>(b, r[1]), Jet1<T>(c, r[2]));
    TriadJet<T> out;
    out.a = a;  out.b = b;  out.c = c;
    out.da = r[0];  out.db = r[1];  out.dc = r[2];
    out.d2a = rj[0].d;  out.d2b = rj[1].d;  out.d2c = rj[2].d;
    return out;
}

// kinetic metric in x = (log a, log b, log c); det = 384
inline constexpr double KINETIC_G[3][3] = {{4, 4, 16}, {4, 0, 8}, {16, 8, 24}};
inline constexpr double KINETIC_G_INV[3][3] = {
    {-64.0 / 384, 32.0 / 384, 32.0 / 384},
    {32.0 / 384, -160.0 / 384, 32.0 / 384},
    {32.0 / 384, 32.0 / 384, -16.0 / 384}};

template <class T>
T superpotential(const T& a, const T& b, const T& c) {
    T c2 = c * c, c4 = c2 * c2;
    return T(4) * a * a * a * b * c2 + T(2) * a * a * b * b * c2 +
           T(4) * a * b * c4 - b * b * c4;
}

template <class T>
T potential(const T& a, const T& b, const T& c) {
    T a2 = a * a, b2 = b * b, c2 = c * c;
    T a4 = a2 * a2, c4 = c2 * c2;
    return (b2 * c4 / T(2)) *
           (T(4) * a4 * a2 + T(2) * a4 * b2 - T(24) * a4 * c2 - T(4) * a2 * c4 + b2 * c4);
}

// log-gradient p_i = x_i dW/dx_i = (a W_a, b W_b, c W_c)
std::array<double, 3> superpotential_log_gradient(double a, double b, double c);

// |V + 1/2 p^T g^{-1} p| / |V|
double superpotential_residual(double a, double b, double c);

// (da/dt, db/dt, dc/dt) obtained from the gradient of W; agrees with flow_rhs
std::array<double, 3> gradient_flow_rates(double a, double b, double c);

// |T + V| / (|T| + |V|) along the flow (zero-energy condition)
double energy_residual(double a, double b, double c);

// Euler-Lagrange residuals in eta-time, one per log coordinate, each
// normalised by the size of its terms. Requires full second derivatives,
// so it is meaningful for any triad jet, not only flow jets.
std::array<double, 3> euler_lagrange_residual(const TriadJet<double>& tr);

struct FlowState {
    double t, a, b, c;
};

// adaptive integration of the flow; returns every accepted step
std::vector<FlowState> integrate_flow(const FlowState& start, double t_end,
                                      double rel_tol = 1e-10);

// consistency report for the standard sub-truncations of the flow
struct TruncationReport {
    std::string name;
    bool first_order_consistent;
    std::string note;
};

std::vector<TruncationReport> truncation_report();

}  // namespace spin7
