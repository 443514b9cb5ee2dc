#include "spin7/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "spin7/quadrature.hpp"
#include "spin7/special.hpp"

namespace spin7 {

namespace {

double F_z(double x) { return hyp2f1(1.0, 0.5, 1.25, x); }   // z-chart kernel
double F_y(double x) { return hyp2f1(0.5, 0.75, 1.5, x); }   // y-chart kernel

void check_gap(double gap) {
    if (!(gap > 0.0) || !(gap < 1.0))
        throw std::domain_error("z-chart: z must lie in (0,1)");
}

// integrand of the log-derivative quadrature in s = (1 - z)^{1/4};
// w = v * s stays finite at the boundary endpoint
struct TailZ {
    double k;
    double operator()(double s) const {
        double s4 = s * s * s * s;
        double z = 1.0 - s4;
        double x = s4 * (2.0 - s4);
        double w = 2.0 * k * std::sqrt(z) * std::pow(2.0 - s4, -0.25) -
                   2.0 * z * F_z(x) * s;
        return 4.0 / (w * (2.0 - s4));
    }
};

struct TailY {
    double kappa;
    double operator()(double s) const {
        double s4 = s * s * s * s;
        double yt = 1.0 - s4;
        double w = std::pow(2.0 - s4, -0.25) * (kappa + yt * F_y(yt * yt));
        return 4.0 / (w * (2.0 - s4));
    }
};

double bracket_largest_root(const std::vector<double>& grid,
                            const std::function<double(double)>& g) {
    double lo = 0, hi = 0;
    bool found = false;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        double g0 = g(grid[i - 1]), g1 = g(grid[i]);
        if (g0 == 0.0) { lo = hi = grid[i - 1]; found = true; continue; }
        if (g1 == 0.0) { lo = hi = grid[i]; found = true; continue; }
        if ((g0 < 0) != (g1 < 0)) {
            lo = grid[i - 1];
            hi = grid[i];
            found = true;  // keep scanning: we want the root nearest the boundary
        }
    }
    if (!found) throw std::domain_error("bolt search: no v = 2 crossing in the chart");
    if (lo == hi) return lo;
    double glo = g(lo);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double kappa_bar() {
    return 2.0 * std::sqrt(M_PI) * gamma_fn(1.25) / gamma_fn(0.75);
}

double v_of_z_gap(double gap, double k) {
    check_gap(gap);
    double z = 1.0 - gap;
    double x = gap * (2.0 - gap);  // 1 - z^2, computed without cancellation
    if (z < 0.5) {
        // connection form of the kernel: F(1-z^2) = -F(z^2) +
        // (kappa_bar/sqrt(2)) z^{-1/2} (1-z^2)^{-1/4}; stable down to z = 0
        double pre = 2.0 * std::sqrt(z) * std::pow(x, -0.25);
        return pre * (k - kappa_bar() / std::sqrt(2.0)) + 2.0 * z * F_z(z * z);
    }
    return 2.0 * k * std::sqrt(z) * std::pow(x, -0.25) - 2.0 * z * F_z(x);
}

double v_of_z(double z, double k) { return v_of_z_gap(1.0 - z, k); }

double v_of_y(double y, double kappa) {
    if (!(y > -1.0) || !(y < 1.0))
        throw std::domain_error("y-chart: y must lie in (-1,1)");
    double x = y * y;
    return std::pow(1.0 - x, -0.25) * (kappa + y * F_y(x));
}

// fourth-order stencils: v''' grows like a negative power of 1 - z^2, so a
// plain central difference cannot reach the tolerances near the bolt. The
// defect is divided by the size of the terms it balances: v diverges at the
// chart boundary and an absolute defect would just echo that growth
double v_ode_residual_z(double z, double k, double h) {
    auto f = [&](double x) { return v_of_z(x, k); };
    double vp = (-f(z + 2 * h) + 8 * f(z + h) - 8 * f(z - h) + f(z - 2 * h)) / (12 * h);
    double rhs = f(z) + 2.0 * z;
    return std::fabs(2.0 * z * (1.0 - z * z) * vp - rhs) / std::max(1.0, std::fabs(rhs));
}

double v_ode_residual_y(double y, double kappa, double h) {
    auto f = [&](double x) { return v_of_y(x, kappa); };
    double vp = (-f(y + 2 * h) + 8 * f(y + h) - 8 * f(y - h) + f(y - 2 * h)) / (12 * h);
    double rhs = y * f(y) + 2.0;
    return std::fabs(2.0 * (1.0 - y * y) * vp - rhs) / std::max(1.0, std::fabs(rhs));
}

double first_integral_k(double z, double v) {
    double x = 1.0 - z * z;
    return (v + 2.0 * z * F_z(x)) * std::pow(x, 0.25) / (2.0 * std::sqrt(z));
}

double first_integral_kappa(double y, double v) {
    return v * std::pow(1.0 - y * y, 0.25) - y * F_y(y * y);
}

double f_of_z_gap(double gap, double k, double f_norm) {
    check_gap(gap);
    if (!(k > 0.0)) throw std::domain_error("f_of_z: requires k > 0");
    double smax = std::pow(gap, 0.25);
    double I = integrate_adaptive(TailZ{k}, 0.0, smax, 1e-13, 1e-15).value;
    double z = 1.0 - gap;
    return f_norm * std::sqrt(1.0 + z) / (std::sqrt(2.0) * smax * smax) * std::exp(-I);
}

double f_of_z(double z, double k, double f_norm) { return f_of_z_gap(1.0 - z, k, f_norm); }

double f_of_y(double y, double kappa, double f_norm) {
    if (!(y > -1.0) || !(y < 1.0))
        throw std::domain_error("y-chart: y must lie in (-1,1)");
    if (!(kappa > -kappa_bar()))
        throw std::domain_error("f_of_y: requires kappa > -kappa_bar");
    double smax = std::pow(1.0 - y, 0.25);
    double I = integrate_adaptive(TailY{kappa}, 0.0, smax, 1e-13, 1e-15).value;
    return f_norm * std::sqrt(1.0 + y) / (std::sqrt(2.0) * smax * smax) * std::exp(-I);
}

double bolt_z(double k) {
    if (!(k > 0.0)) throw std::domain_error("bolt_z: requires k > 0");
    std::vector<double> grid;
    for (double z = 1e-16; z < 0.6; z *= 2.5) grid.push_back(z);
    for (double gap = 0.5; gap > 1e-13; gap *= 0.4) grid.push_back(1.0 - gap);
    std::sort(grid.begin(), grid.end());
    auto g = [k](double z) { return v_of_z_gap(1.0 - z, k) - 2.0; };
    return bracket_largest_root(grid, g);
}

double bolt_y(double kappa) {
    double kb = kappa_bar();
    if (!(kappa > -kb))
        throw std::domain_error("bolt_y: requires kappa > -kappa_bar");
    if (kappa >= kb) {
        if (std::fabs(kappa - kb) < 1e-9) return -1.0;  // closing endpoint
        throw std::domain_error("bolt_y: no bolt for kappa > kappa_bar");
    }
    std::vector<double> grid;
    for (double gap = 1.9; gap > 1e-9; gap *= 0.5) grid.push_back(gap - 1.0);  // from -1 side
    for (double gap = 1e-12; gap < 1.0; gap *= 3.0) grid.push_back(1.0 - gap);
    std::sort(grid.begin(), grid.end());
    auto g = [kappa](double y) { return v_of_y(y, kappa) - 2.0; };
    return bracket_largest_root(grid, g);
}

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::A8: return "A8";
        case Branch::B8: return "B8";
        case Branch::B8minus: return "B8minus";
        case Branch::B8plus: return "B8plus";
    }
    return "?";
}

Classification classify(const SolutionParams& p) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    Classification out{};
    if (p.kappa) {
        double kap = *p.kappa, kb = kappa_bar();
        if (!(kap > -kb) || kap > kb + 1e-9)
            throw std::domain_error("classify: kappa outside (-kappa_bar, kappa_bar]");
        out.branch = Branch::B8plus;
        double y0 = bolt_y(kap);
        out.bolt_coord = y0;
        if (y0 > -1.0) {
            out.bolt_v_residual = std::fabs(v_of_y(y0, kap) - 2.0);
            out.s4_radius_sq = f_of_y(y0, kap, p.f_norm);
        } else {
            out.bolt_v_residual = 0.0;
            out.s4_radius_sq = 0.0;  // the bolt shrinks away at the endpoint
        }
        out.circle_radius_sq = 8.0 * std::sqrt(2.0) * p.f_norm / ((kap + kb) * (kap + kb));
        return out;
    }
    if (p.k < 0.0) throw std::domain_error("classify: k must be >= 0");
    if (p.k == 0.0) {
        // elementary boundary family at unit scale
        out.branch = p.negative_v ? Branch::A8 : Branch::B8;
        out.bolt_coord = nan;
        out.bolt_v_residual = 0.0;
        out.s4_radius_sq = p.negative_v ? 0.0 : 4.0;
        out.circle_radius_sq = 4.0;
        return out;
    }
    out.branch = Branch::B8minus;
    double z0 = bolt_z(p.k);
    out.bolt_coord = z0;
    out.bolt_v_residual = std::fabs(v_of_z(z0, p.k) - 2.0);
    out.s4_radius_sq = f_of_z(z0, p.k, p.f_norm);
    out.circle_radius_sq = 2.0 * std::sqrt(2.0) * p.f_norm / (p.k * p.k);
    return out;
}

MetricPointZV metric_from_zv_gap(double gap, double k, double f_norm) {
    double z = 1.0 - gap;
    double v = v_of_z_gap(gap, k);
    if (!(v >= 2.0 - 1e-9))
        throw std::domain_error("metric_from_zv: point outside the bolt domain (v < 2)");
    double f = f_of_z_gap(gap, k, f_norm);
    MetricPointZV out;
    out.chart = z;
    out.v = v;
    out.coef_S4 = f;
    out.coef_R12 = 4.0 * (v - 2.0) * z * f / ((1.0 + z) * v);
    out.coef_R3 = 4.0 * out.coef_R12 / (v * v);
    // 1 - z^2 written in the gap: the difference of squares cancels badly
    // once the gap is below ~1e-8
    out.g_chart = v * f / (4.0 * z * gap * (2.0 - gap) * gap * (v - 2.0));
    return out;
}

MetricPointZV metric_from_zv(const SolutionParams& p, double chart_coord) {
    if (p.kappa) {
        double y = chart_coord, kap = *p.kappa;
        double v = v_of_y(y, kap);
        if (!(v >= 2.0 - 1e-9))
            throw std::domain_error("metric_from_zv: point outside the bolt domain (v < 2)");
        double f = f_of_y(y, kap, p.f_norm);
        MetricPointZV out;
        out.chart = y;
        out.v = v;
        out.coef_S4 = f;
        out.coef_R12 = 4.0 * (v - 2.0) * f / ((1.0 + y) * v);
        out.coef_R3 = 4.0 * out.coef_R12 / (v * v);
        out.g_chart = v * f / (4.0 * (1.0 - y * y) * (1.0 - y) * (v - 2.0));
        return out;
    }
    if (p.k == 0.0)
        throw std::domain_error(
            "metric_from_zv: the k = 0 families live on the chart boundary; sample them "
            "through the metric families instead");
    return metric_from_zv_gap(1.0 - chart_coord, p.k, p.f_norm);
}

TriadJet<double> triad_from_zv_gap(double gap, double k, double f_norm) {
    using J1 = Jet1<double>;
    using J2d = Jet2<double>;
    double z = 1.0 - gap;
    double v = v_of_z_gap(gap, k);
    double f = f_of_z_gap(gap, k, f_norm);

    // v'' and f'' from 1-jets of the first-order relations
    J1 zj(z, 1.0);
    J1 vj(v, (v + 2.0 * z) / (2.0 * z * (1.0 - z * z)));
    J1 one(1.0);
    J1 vp_j = (vj + J1(2.0) * zj) / (J1(2.0) * zj * (one - zj * zj));
    J1 lf_j = (vj + one) / (vj * (one - zj * zj));  // d log f / dz
    J2d v2(v, vp_j.v, vp_j.d);
    J2d f2(f, f * lf_j.v, f * lf_j.v * lf_j.v + f * lf_j.d);
    J2d z2 = J2d::variable(z);

    J2d cR12 = J2d(4.0) * (v2 - J2d(2.0)) * z2 * f2 / ((J2d(1.0) + z2) * v2);
    J2d a = J2d(0.5) * sqrt(cR12);
    J2d b = J2d(2.0) * a / v2;
    J2d c = sqrt(f2);
    J2d g_zz = v2 * f2 /
               (J2d(4.0) * z2 * (J2d(1.0) - z2 * z2) * (J2d(1.0) - z2) * (v2 - J2d(2.0)));
    J2d zdot = J2d(1.0) / sqrt(g_zz);
    return triad_from_radial(a, b, c, zdot);
}

TriadJet<double> triad_from_y(double y, double kappa, double f_norm) {
    using J1 = Jet1<double>;
    using J2d = Jet2<double>;
    double v = v_of_y(y, kappa);
    double f = f_of_y(y, kappa, f_norm);

    J1 yj(y, 1.0);
    J1 vj(v, (y * v + 2.0) / (2.0 * (1.0 - y * y)));
    J1 one(1.0);
    J1 vp_j = (yj * vj + J1(2.0)) / (J1(2.0) * (one - yj * yj));
    J1 lf_j = (vj + one) / (vj * (one - yj * yj));
    J2d v2(v, vp_j.v, vp_j.d);
    J2d f2(f, f * lf_j.v, f * lf_j.v * lf_j.v + f * lf_j.d);
    J2d y2 = J2d::variable(y);

    J2d cR12 = J2d(4.0) * (v2 - J2d(2.0)) * f2 / ((y2 + J2d(1.0)) * v2);
    J2d a = J2d(0.5) * sqrt(cR12);
    J2d b = J2d(2.0) * a / v2;
    J2d c = sqrt(f2);
    J2d g_yy = v2 * f2 /
               (J2d(4.0) * (J2d(1.0) - y2 * y2) * (J2d(1.0) - y2) * (v2 - J2d(2.0)));
    J2d ydot = J2d(1.0) / sqrt(g_yy);
    return triad_from_radial(a, b, c, ydot);
}

std::array<double, 2> phase_field(double z, double v) {
    return {2.0 * z * (1.0 - z * z), v + 2.0 * z};
}

ZV zv_from_triad(double a, double b, double c) {
    return {a * a * a / (a * c * c - b * c * c - a * a * a), 2.0 * a / b};
}

}  // namespace spin7
