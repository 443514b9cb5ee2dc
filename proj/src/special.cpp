#include "spin7/special.hpp"

#include <cmath>
#include <stdexcept>

namespace spin7 {

namespace {

// Lanczos, g = 7, 9 terms
const double LANCZOS[9] = {
    0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
    771.32342877765313,   -176.61502916214059, 12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_pos(double x) {
    // x > 0
    if (x < 0.5) {
        // reflection keeps the Lanczos argument comfortable
        return M_PI / (std::sin(M_PI * x) * gamma_pos(1.0 - x));
    }
    x -= 1.0;
    double acc = LANCZOS[0];
    for (int i = 1; i < 9; ++i) acc += LANCZOS[i] / (x + i);
    double t = x + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

double series_2f1(double a, double b, double c, double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 600; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge");
}

}  // namespace

double gamma_fn(double x) {
    if (x > 0.0) return gamma_pos(x);
    if (x == std::floor(x)) throw std::domain_error("gamma_fn: non-positive integer");
    return M_PI / (std::sin(M_PI * x) * gamma_pos(1.0 - x));
}

double hyp2f1(double a, double b, double c, double x) {
    if (x >= 1.0) throw std::domain_error("hyp2f1: x must be < 1");
    if (std::fabs(x) <= 0.5) return series_2f1(a, b, c, x);
    if (x > 0.5) {
        // 1-x connection; valid for non-integer c-a-b
        double s = c - a - b;
        double y = 1.0 - x;
        double g1 = gamma_fn(c) * gamma_fn(s) / (gamma_fn(c - a) * gamma_fn(c - b));
        double g2 = gamma_fn(c) * gamma_fn(-s) / (gamma_fn(a) * gamma_fn(b));
        return g1 * hyp2f1(a, b, a + b - c + 1.0, y) +
               g2 * std::pow(y, s) * hyp2f1(c - a, c - b, c - a - b + 1.0, y);
    }
    // x < -1/2: Pfaff sends it to x/(x-1) in (1/3, 1)
    double z = x / (x - 1.0);
    return std::pow(1.0 - x, -a) * hyp2f1(a, c - b, c, z);
}

}  // namespace spin7
