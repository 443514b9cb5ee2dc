#pragma once
// The closed-form metric families. Two are the complete cohomogeneity-one
// solutions this project is about: the negative-b family closing on a
// point (topologically R^8) and the positive-b family closing on an S^4
// bolt; both are ALC with an asymptotic circle of radius |b(infinity)|.
// The other two are the classical comparison spaces: the a = b spin
// bundle solution and the product of the S^2-bundle G2 metric with a
// circle, which the b-family approaches in the decompactification limit.
//
//   ds^2 = dt^2 + c^2 P_i P_i + 4a^2 (R_1^2 + R_2^2) + 4b^2 R_3^2
//
// sample() reports the squared coefficients in the radial coordinate r
// (g_rr dr^2 + coef_S4 sum P^2 + coef_R12 (R_1^2+R_2^2) + coef_R3 R_3^2)
// along with the full triad jets in arc length.

#include <array>
#include <string>

#include "spin7/jet.hpp"
#include "spin7/rational.hpp"

namespace spin7 {

// A8: the negative-b space closing on a point; B8: the positive-b space
// closing on an S^4 bolt. SpinBundle is the a = b solution on the spin
// bundle of S^4; G2Circle the S^2-bundle G2 metric times a circle.
enum class Family { A8, B8, SpinBundle, G2Circle };

struct MetricSample {
    double r;
    double g_rr;
    double coef_S4;   // c^2
    double coef_R12;  // 4 a^2
    double coef_R3;   // 4 b^2
    double drdt;      // 1/sqrt(g_rr), signed positive
    TriadJet<double> triad;
};

struct FamilySquares {
    Rational g_rr, coef_S4, coef_R12, coef_R3;
};

struct BoltData {
    double r_bolt;
    double s4_radius_sq;              // coef_S4 at the bolt
    std::array<double, 3> rates;      // d(a,b,c)/d rho at the bolt
    std::array<double, 3> exponents;  // fitted collapse exponents (1 = smooth)
};

struct InterpolationReport {
    double a_slope_infinity;  // a/r -> 1/2
    double c_slope_infinity;  // c/r -> 1/sqrt(2)
    double b_infinity;        // finite: the ALC circle, sign included
    double circle_radius_sq;  // 4 b_infinity^2
    double cone_ratio;        // (2a/c)^2 -> 2, the squashed-CP^3 cone
};

class MetricFamily {
public:
    MetricFamily(Family f, double scale = 1.0) : family_(f), scale_(scale) {}

    Family family() const { return family_; }
    double scale() const { return scale_; }
    std::string name() const;

    double r_min() const;  // open end of the domain (bolt or singular radius)
    MetricSample sample(double r) const;

    // arc length from the closing locus to r (families with a bolt/nut)
    double arc_length_from_bolt(double r) const;

    BoltData bolt_data() const;
    InterpolationReport interpolation_report() const;

    // exact squared coefficients; defined for the nut and bolt families at
    // any rational (r, scale)
    static FamilySquares squares(Family f, const Rational& r, const Rational& scale);
    // spin-bundle squares at r = scale * u^3 (rational u keeps the 10/3
    // power rational)
    static FamilySquares spin_bundle_squares_param(const Rational& u,
                                                   const Rational& r0);

private:
    Family family_;
    double scale_;
};

}  // namespace spin7
