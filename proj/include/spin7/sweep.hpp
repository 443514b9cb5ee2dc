#pragma once
// Batch evaluations that are worth spreading across cores. Every work item
// seeds its own RNG stream from (seed, index), so the parallel and serial
// paths visit identical numbers and produce identical results; the serial
// path stays as the reference the tests compare against.

#include <array>
#include <cstdint>
#include <vector>

namespace spin7 {

// splitmix64 stream with a Box-Muller normal on top; fully deterministic,
// no library distributions involved
struct RandomStream {
    std::uint64_t state;
    bool has_spare = false;
    double spare = 0;

    explicit RandomStream(std::uint64_t s) : state(s) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
    double normal();
};

struct CalibrationScan {
    double max_value = 0;
    std::size_t argmax = 0;
    std::size_t samples = 0;
};

// max of |Phi(plane)| over n random orthonormal 4-planes
CalibrationScan calibration_scan(std::size_t n, std::uint64_t seed, bool parallel);

// (z, v, dz/dtau, dv/dtau) on an nz x nv grid of cell centres, nudged off
// the lines z = -1, 0, 1; exactly nz*nv rows in row-major order
std::vector<std::array<double, 4>> phase_portrait_grid(double z_min, double z_max,
                                                       double v_min, double v_max,
                                                       int nz, int nv, bool parallel);

}  // namespace spin7
