#include "spin7/curvature.hpp"

#include <cmath>

namespace spin7 {

double ricci_flat_residual(const TriadJet<double>& tr) {
    auto ric = ricci(tr);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) worst = std::max(worst, std::fabs(ric[i][j]));
    return worst;
}

double max_abs_riemann(const TriadJet<double>& tr) {
    auto rm = riemann(tr);
    double worst = 0.0;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c)
                for (int d = 0; d < 8; ++d)
                    worst = std::max(worst, std::fabs(rm.r[a][b][c][d]));
    return worst;
}

}  // namespace spin7
