#pragma once
// Gamma (Lanczos) and the Gauss hypergeometric function 2F1 on the real
// line x < 1. Series for |x| <= 1/2, the 1-x connection formula for
// x in (1/2, 1), Pfaff's x/(x-1) map for x < -1/2. The parameter sets
// used by the closed-form solution have non-integer c-a-b (it is -1/4 or
// +1/4), which keeps the 1-x branch free of logarithms.

namespace spin7 {

double gamma_fn(double x);

double hyp2f1(double a, double b, double c, double x);

}  // namespace spin7
