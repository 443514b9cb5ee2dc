// Structure equations of the homogeneous coframe, d(e_g) as constant
// 2-forms. The P_i are acted on by both su(2) factors, the R_i / L_i
// close among themselves up to the P ^ P curvature terms. d(dt) = 0.
// The Jacobi property d(d(e_g)) = 0 is not assumed here; the test suite
// checks it for every generator in exact arithmetic.

#include "spin7/forms.hpp"

namespace spin7 {

namespace {

constexpr Mask M(int i, int j) { return gen_bit(i) | gen_bit(j); }

const std::vector<DGenTerm> DGEN[NGEN] = {
    // dP0
    {{M(1, 4), -1, 1}, {M(1, 8), -1, 1}, {M(2, 5), -1, 1}, {M(2, 9), -1, 1},
     {M(3, 6), -1, 1}, {M(3, 10), -1, 1}},
    // dP1
    {{M(0, 4), 1, 1}, {M(0, 8), 1, 1}, {M(3, 5), 1, 1}, {M(3, 9), -1, 1},
     {M(2, 6), -1, 1}, {M(2, 10), 1, 1}},
    // dP2
    {{M(3, 4), -1, 1}, {M(3, 8), 1, 1}, {M(0, 5), 1, 1}, {M(0, 9), 1, 1},
     {M(1, 6), 1, 1}, {M(1, 10), -1, 1}},
    // dP3
    {{M(2, 4), 1, 1}, {M(2, 8), -1, 1}, {M(1, 5), -1, 1}, {M(1, 9), 1, 1},
     {M(0, 6), 1, 1}, {M(0, 10), 1, 1}},
    // dR1
    {{M(5, 6), -2, 1}, {M(0, 1), -1, 2}, {M(2, 3), -1, 2}},
    // dR2
    {{M(4, 6), 2, 1}, {M(0, 2), -1, 2}, {M(1, 3), 1, 2}},
    // dR3
    {{M(4, 5), -2, 1}, {M(0, 3), -1, 2}, {M(1, 2), -1, 2}},
    // d(dt)
    {},
    // dL1
    {{M(9, 10), 2, 1}, {M(0, 1), -1, 2}, {M(2, 3), 1, 2}},
    // dL2
    {{M(8, 10), -2, 1}, {M(0, 2), -1, 2}, {M(1, 3), -1, 2}},
    // dL3
    {{M(8, 9), 2, 1}, {M(0, 3), -1, 2}, {M(1, 2), 1, 2}},
};

}  // namespace

const std::vector<DGenTerm>& dgen(int g) { return DGEN[g]; }

}  // namespace spin7
