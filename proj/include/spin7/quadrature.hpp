#pragma once
// Gauss-Kronrod 7-15 panels with adaptive bisection. Improper integrals
// are handled by the callers through explicit substitutions (1/r tails,
// quartic-root boundary charts), so the integrand seen here is always
// finite on a finite interval.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spin7 {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evals = 0;
};

namespace gk_detail {
// 15-point Kronrod extension of 7-point Gauss, abscissae >= 0
inline constexpr double XGK[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double WGK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};
}  // namespace gk_detail

template <class F>
QuadResult gk15(F&& f, double lo, double hi) {
    using namespace gk_detail;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double fc = f(mid);
    double kron = WGK[7] * fc;
    double gauss = WG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = half * XGK[i];
        double fsum = f(mid - dx) + f(mid + dx);
        kron += WGK[i] * fsum;
        if (i % 2 == 1) gauss += WG[i / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    double diff = std::fabs(kron - gauss);
    QuadResult out;
    out.value = kron;
    out.error = std::pow(200.0 * diff, 1.5) / 200.0;  // standard (200|K-G|)^{3/2}
    out.evals = 15;
    return out;
}

template <class F>
QuadResult integrate_adaptive(F&& f, double lo, double hi, double rel_tol = 1e-12,
                              double abs_tol = 1e-14, std::size_t max_panels = 4000) {
    struct Panel {
        double lo, hi, value, error;
    };
    QuadResult whole = gk15(f, lo, hi);
    std::vector<Panel> panels{{lo, hi, whole.value, whole.error}};
    std::size_t evals = whole.evals;

    auto total = [&panels] {
        double v = 0, e = 0;
        for (const auto& p : panels) {
            v += p.value;
            e += p.error;
        }
        return std::pair{v, e};
    };

    while (panels.size() < max_panels) {
        auto [v, e] = total();
        if (e <= abs_tol || e <= rel_tol * std::fabs(v)) {
            return {v, e, evals};
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        Panel p = panels[worst];
        double mid = 0.5 * (p.lo + p.hi);
        if (mid <= p.lo || mid >= p.hi) break;  // interval exhausted in double
        QuadResult left = gk15(f, p.lo, mid);
        QuadResult right = gk15(f, mid, p.hi);
        evals += left.evals + right.evals;
        panels[worst] = {p.lo, mid, left.value, left.error};
        panels.push_back({mid, p.hi, right.value, right.error});
    }
    auto [v, e] = total();
    return {v, e, evals};
}

}  // namespace spin7
