// The acceptance gate. One line per criterion with the measured values;
// finishes with the mutation probe and the total runtime. Exits nonzero
// if anything fails, so ctest treats the whole gate as one test.

#include <chrono>
#include <cstdio>

#include "spin7/acceptance.hpp"

int main() {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;

    for (const auto& r : spin7::run_acceptance()) {
        all = all && r.pass;
        std::printf("%s  %2d  %s\n      %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.label.c_str(), r.detail.c_str());
        std::fflush(stdout);
    }

    spin7::MutationCheck mc = spin7::run_mutation_check();
    all = all && mc.detected;
    std::printf("%s  --  mutation probe: flipping one sign in the flow moves the "
                "gradient by %.3e and the Ricci residual to %.3e\n",
                mc.detected ? "PASS" : "FAIL", mc.gradient_mismatch,
                mc.ricci_residual);

    auto t1 = std::chrono::steady_clock::now();
    std::printf("%s in %.1f s\n", all ? "all criteria pass" : "FAILURES above",
                std::chrono::duration<double>(t1 - t0).count());
    return all ? 0 : 1;
}
