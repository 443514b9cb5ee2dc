#include "spin7/sweep.hpp"

#include <cmath>

#include "spin7/clifford.hpp"
#include "spin7/closed_form.hpp"

namespace spin7 {

double RandomStream::normal() {
    if (has_spare) {
        has_spare = false;
        return spare;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * M_PI * u2;
    spare = r * std::sin(th);
    has_spare = true;
    return r * std::cos(th);
}

namespace {

double plane_value(const Form<double>& phi, std::uint64_t seed, std::size_t index) {
    RandomStream rng(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    std::array<std::array<double, 8>, 4> X;
    for (auto& v : X)
        for (double& x : v) x = rng.normal();
    if (!orthonormalize(X)) return 0.0;
    return std::fabs(form_on_vectors(phi, X));
}

}  // namespace

CalibrationScan calibration_scan(std::size_t n, std::uint64_t seed, bool parallel) {
    const Form<double> phi = cayley_form();
    CalibrationScan out;
    out.samples = n;
    if (n == 0) return out;

    if (!parallel) {
        for (std::size_t i = 0; i < n; ++i) {
            double v = plane_value(phi, seed, i);
            if (v > out.max_value || (v == out.max_value && i < out.argmax)) {
                out.max_value = v;
                out.argmax = i;
            }
        }
        return out;
    }

    double best = -1;
    long long best_idx = 0;
#ifdef _OPENMP
#pragma omp parallel
    {
        double local_best = -1;
        long long local_idx = 0;
#pragma omp for schedule(static)
        for (long long i = 0; i < (long long)n; ++i) {
            double v = plane_value(phi, seed, (std::size_t)i);
            if (v > local_best || (v == local_best && i < local_idx)) {
                local_best = v;
                local_idx = i;
            }
        }
#pragma omp critical
        {
            if (local_best > best || (local_best == best && local_idx < best_idx)) {
                best = local_best;
                best_idx = local_idx;
            }
        }
    }
#else
    for (long long i = 0; i < (long long)n; ++i) {
        double v = plane_value(phi, seed, (std::size_t)i);
        if (v > best || (v == best && i < best_idx)) {
            best = v;
            best_idx = i;
        }
    }
#endif
    out.max_value = best;
    out.argmax = (std::size_t)best_idx;
    return out;
}

std::vector<std::array<double, 4>> phase_portrait_grid(double z_min, double z_max,
                                                       double v_min, double v_max,
                                                       int nz, int nv, bool parallel) {
    std::vector<std::array<double, 4>> rows((std::size_t)nz * nv);
    double dz = (z_max - z_min) / nz, dv = (v_max - v_min) / nv;
    auto fill = [&](long long idx) {
        int i = int(idx / nv), j = int(idx % nv);
        double z = z_min + (i + 0.5) * dz;
        for (double bad : {-1.0, 0.0, 1.0})
            if (std::fabs(z - bad) < 1e-9) z += 1e-6 * (dz > 0 ? dz : 1.0);
        double v = v_min + (j + 0.5) * dv;
        auto f = phase_field(z, v);
        rows[idx] = {z, v, f[0], f[1]};
    };

    long long total = (long long)nz * nv;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long idx = 0; idx < total; ++idx) fill(idx);
    } else {
        for (long long idx = 0; idx < total; ++idx) fill(idx);
    }
    return rows;
}

}  // namespace spin7
