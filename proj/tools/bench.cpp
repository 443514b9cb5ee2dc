// Timing comparison between the serial reference kernels and their
// parallel versions, with an equality check: both paths must produce
// identical results, not merely close ones.

#include <chrono>
#include <cstdio>

#include "spin7/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    {
        const std::size_t n = 200000;
        spin7::CalibrationScan serial, parallel;
        double ts = time_ms([&] { serial = spin7::calibration_scan(n, 7, false); });
        double tp = time_ms([&] { parallel = spin7::calibration_scan(n, 7, true); });
        bool same = serial.max_value == parallel.max_value &&
                    serial.argmax == parallel.argmax;
        std::printf("calibration scan, %zu planes: serial %.1f ms, parallel %.1f ms, "
                    "speedup %.2fx, results %s (max %.12f at %zu)\n",
                    n, ts, tp, ts / tp, same ? "identical" : "DIFFER",
                    serial.max_value, serial.argmax);
        if (!same) return 1;
    }

    {
        const int nz = 800, nv = 800;
        std::vector<std::array<double, 4>> serial, parallel;
        double ts = time_ms(
            [&] { serial = spin7::phase_portrait_grid(-1.5, 1.5, -6, 6, nz, nv, false); });
        double tp = time_ms(
            [&] { parallel = spin7::phase_portrait_grid(-1.5, 1.5, -6, 6, nz, nv, true); });
        bool same = serial == parallel;
        std::printf("phase grid, %dx%d: serial %.1f ms, parallel %.1f ms, "
                    "speedup %.2fx, results %s\n",
                    nz, nv, ts, tp, ts / tp, same ? "identical" : "DIFFER");
        if (!same) return 1;
    }
    return 0;
}
