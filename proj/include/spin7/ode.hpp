#pragma once
// Adaptive Dormand-Prince 5(4). Dense enough for this project: fixed-size
// state, accepted steps recorded, integration direction free.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spin7 {

template <int N>
struct OdeResult {
    std::vector<double> t;
    std::vector<std::array<double, N>> y;
    std::size_t steps = 0;
    std::size_t rejected = 0;
};

template <int N, class F>
OdeResult<N> integrate_ode(F rhs, std::array<double, N> y0, double t0, double t1,
                           double rel_tol = 1e-10, double abs_tol = 1e-13) {
    static constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
    static constexpr double A21 = 1.0 / 5;
    static constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
    static constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
    static constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                            A53 = 64448.0 / 6561, A54 = -212.0 / 729;
    static constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                            A64 = 49.0 / 176, A65 = -5103.0 / 18656;
    static constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                            B5 = -2187.0 / 6784, B6 = 11.0 / 84;
    static constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                            E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;

    using Vec = std::array<double, N>;
    auto axpy = [](Vec& y, double s, const Vec& x) {
        for (int i = 0; i < N; ++i) y[i] += s * x[i];
    };

    OdeResult<N> out;
    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double span = std::fabs(t1 - t0);
    if (span == 0.0) {
        out.t.push_back(t0);
        out.y.push_back(y0);
        return out;
    }
    double h = dir * span / 100.0;
    double t = t0;
    Vec y = y0;
    Vec k1 = rhs(t, y);
    out.t.push_back(t);
    out.y.push_back(y);

    const std::size_t max_steps = 2000000;
    while (dir * (t1 - t) > 0) {
        if (out.steps + out.rejected > max_steps)
            throw std::runtime_error("integrate_ode: step limit exceeded");
        if (!std::isfinite(h) || t + h == t)
            throw std::runtime_error("integrate_ode: step size underflow");
        if (dir * (t + h - t1) > 0) h = t1 - t;

        Vec y2 = y; axpy(y2, h * A21, k1);
        Vec k2 = rhs(t + C2 * h, y2);
        Vec y3 = y; axpy(y3, h * A31, k1); axpy(y3, h * A32, k2);
        Vec k3 = rhs(t + C3 * h, y3);
        Vec y4 = y; axpy(y4, h * A41, k1); axpy(y4, h * A42, k2); axpy(y4, h * A43, k3);
        Vec k4 = rhs(t + C4 * h, y4);
        Vec y5 = y; axpy(y5, h * A51, k1); axpy(y5, h * A52, k2); axpy(y5, h * A53, k3);
        axpy(y5, h * A54, k4);
        Vec k5 = rhs(t + C5 * h, y5);
        Vec y6 = y; axpy(y6, h * A61, k1); axpy(y6, h * A62, k2); axpy(y6, h * A63, k3);
        axpy(y6, h * A64, k4); axpy(y6, h * A65, k5);
        Vec k6 = rhs(t + h, y6);
        Vec ynew = y; axpy(ynew, h * B1, k1); axpy(ynew, h * B3, k3); axpy(ynew, h * B4, k4);
        axpy(ynew, h * B5, k5); axpy(ynew, h * B6, k6);
        Vec k7 = rhs(t + h, ynew);

        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                            E6 * k6[i] + E7 * k7[i]);
            double sc = abs_tol + rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err = std::max(err, std::fabs(e) / sc);
        }

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;
            out.t.push_back(t);
            out.y.push_back(y);
            ++out.steps;
        } else {
            ++out.rejected;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
        h *= std::min(5.0, std::max(0.2, fac));
    }
    return out;
}

}  // namespace spin7
