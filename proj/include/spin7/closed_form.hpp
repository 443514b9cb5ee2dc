#pragma once
// The general solution of the flow in the (z, v) phase chart.
//
// With f = c^2 as radial variable (df = ... along the flow), v = 2a/b and
// z = a^3 / (a c^2 - b c^2 - a^3), the third-order radial ODE
//
//   2 f^2 f''' + 2 f (f' - 3) f'' - (f' + 1)(f' - 1)(f' - 3) = 0
//
// collapses to the linear first-order equation
//
//   2 z (1 - z^2) dv/dz = v + 2z,
//
// solved by hypergeometric functions. Two charts cover the solution set:
//
//   v_of_z(z; k)      = 2 k sqrt(z) (1-z^2)^{-1/4} - 2 z F(1, 1/2; 5/4; 1-z^2)
//   v_of_y(y; kappa)  = (1-y^2)^{-1/4} (kappa + y F(1/2, 3/4; 3/2; y^2)),  y = 1/z
//
// and f is recovered from log f' = (v+1)/(v (1-z^2)) by a quadrature that
// is taken in s = (1-z)^{1/4} so the boundary z -> 1 is a regular
// endpoint. The boundary z = 1 at finite v is the elementary family
// f = r + r^2/2; v = 2 marks the bolt.
//
// Everything that evaluates near z = 1 has a gap-native twin taking
// gap = 1 - z directly, because the interesting asymptotics happen at
// gaps far below double rounding of z itself.

#include <array>
#include <optional>
#include <string>

#include "spin7/jet.hpp"

namespace spin7 {

// kappa at which the y-chart bolt reaches y0 = -1: 2 sqrt(pi) G(5/4)/G(3/4)
double kappa_bar();

double v_of_z(double z, double k);
double v_of_z_gap(double gap, double k);  // gap = 1 - z
double v_of_y(double y, double kappa);

// residual of the v equation by finite differences (h in the chart),
// normalised by the magnitude of the equation's terms so the figure stays
// meaningful where v grows toward the chart boundary
double v_ode_residual_z(double z, double k, double h = 1e-6);
double v_ode_residual_y(double y, double kappa, double h = 1e-6);

// conserved along solutions: recovers k (z-chart) / kappa (y-chart)
double first_integral_k(double z, double v);
double first_integral_kappa(double y, double v);

double f_of_z(double z, double k, double f_norm = 1.0);
double f_of_z_gap(double gap, double k, double f_norm = 1.0);
double f_of_y(double y, double kappa, double f_norm = 1.0);

// bolt locations v = 2 (bracket scan + bisection)
double bolt_z(double k);
double bolt_y(double kappa);

struct SolutionParams {
    double k = 0.0;                   // z-chart integration constant
    std::optional<double> kappa{};    // y-chart constant; set => y-chart family
    double f_norm = 1.0;
    bool negative_v = false;          // k = 0: selects the nut branch (v <= -2)
};

enum class Branch { A8, B8, B8minus, B8plus };

std::string branch_name(Branch b);

struct Classification {
    Branch branch;
    // bolt data; z0/y0 is quiet-NaN for the elementary (k = 0) cases
    double bolt_coord;
    double bolt_v_residual;    // |v(bolt) - 2|
    double s4_radius_sq;       // f at the bolt (unit scale for k = 0)
    double circle_radius_sq;   // asymptotic R_3 coefficient
};

// throws std::domain_error for parameters outside the four regular cases
Classification classify(const SolutionParams& p);

struct MetricPointZV {
    double chart;      // z or y
    double v;
    double g_chart;    // coefficient of dz^2 resp. dy^2
    double coef_S4;    // f
    double coef_R12;   // 4 a^2
    double coef_R3;    // 4 b^2
};

MetricPointZV metric_from_zv(const SolutionParams& p, double chart_coord);
MetricPointZV metric_from_zv_gap(double gap, double k, double f_norm);

// triad jets in arc length at a z-chart point, for curvature checks
TriadJet<double> triad_from_zv_gap(double gap, double k, double f_norm);

// same thing in the y chart
TriadJet<double> triad_from_y(double y, double kappa, double f_norm);

// the radial ODE and its first integral Q = 2 f f'' + (f'-3)(f'-1);
// jets are (f, f', f'', f''')
template <class T>
T q_from_f(const std::array<T, 3>& f) {
    return T(2) * f[0] * f[2] + (f[1] - T(3)) * (f[1] - T(1));
}

template <class T>
T radial_ode_lhs(const std::array<T, 4>& f) {
    return T(2) * f[0] * f[0] * f[3] + T(2) * f[0] * (f[1] - T(3)) * f[2] -
           (f[1] + T(1)) * (f[1] - T(1)) * (f[1] - T(3));
}

// f Q' - (f'+1) Q equals the ODE left-hand side identically
template <class T>
T q_identity_residual(const std::array<T, 4>& f) {
    T q = q_from_f<T>({f[0], f[1], f[2]});
    T qp = T(2) * f[0] * f[3] + T(4) * f[1] * f[2] - T(4) * f[2];
    return f[0] * qp - (f[1] + T(1)) * q - radial_ode_lhs(f);
}

// phase-plane vector field (dz/dtau, dv/dtau) = (2z(1-z^2), v + 2z)
std::array<double, 2> phase_field(double z, double v);

// chart coordinates of a triad
struct ZV {
    double z, v;
};
ZV zv_from_triad(double a, double b, double c);

}  // namespace spin7
