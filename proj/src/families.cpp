#include "spin7/families.hpp"

#include <cmath>
#include <stdexcept>

#include "spin7/quadrature.hpp"

namespace spin7 {

namespace {

using J2 = Jet2<double>;

struct RadialTriad {
    J2 a, b, c, rdot;
};

// the nut and bolt families are one formula: the bolt family is the nut
// family continued through scale -> -scale
RadialTriad nut_bolt_profile(double r, double l) {
    J2 rr = J2::variable(r);
    J2 P = (rr + J2(3.0 * l)) * (rr - J2(l));
    J2 sp = sqrt(P);
    J2 a = 0.5 * sp;
    J2 b = J2(-l) * sp / (rr + J2(l));
    J2 c = sqrt((rr * rr - J2(l * l)) * 0.5);
    J2 rdot = sp / (rr + J2(l));
    return {a, b, c, rdot};
}

RadialTriad profile(Family f, double scale, double r) {
    switch (f) {
        case Family::A8:
            return nut_bolt_profile(r, scale);
        case Family::B8:
            return nut_bolt_profile(r, -scale);
        case Family::SpinBundle: {
            J2 rr = J2::variable(r);
            J2 x = pow(J2(scale) / rr, 10.0 / 3.0);
            J2 w = sqrt(J2(1.0) - x);
            J2 a = 0.3 * rr * w;
            J2 c = std::sqrt(0.45) * rr;
            return {a, a, c, w};
        }
        case Family::G2Circle: {
            J2 rr = J2::variable(r);
            J2 w = J2(1.0) - pow(rr, -4.0);
            J2 a = 0.5 * rr * sqrt(J2(2.0) * w);
            J2 c = rr;
            return {a, J2(scale), c, sqrt(w * 0.5)};
        }
    }
    throw std::logic_error("profile: unknown family");
}

// triad values at r = r_min + w^2, written so the gap r - r_min enters as
// w^2 directly; forming r and subtracting r_min back off loses most of the
// significant digits once the gap is below ~1e-8
struct GapTriad {
    double a, b, c, rdot;
};

GapTriad gap_triad(Family f, double s, double w) {
    double g = w * w;
    switch (f) {
        case Family::A8: {
            double sp = w * std::sqrt(4.0 * s + g);  // sqrt((r+3s)(r-s))
            return {0.5 * sp, -s * sp / (2.0 * s + g),
                    w * std::sqrt(0.5 * (2.0 * s + g)), sp / (2.0 * s + g)};
        }
        case Family::B8: {
            double sp = w * std::sqrt(4.0 * s + g);  // sqrt((r-3s)(r+s))
            return {0.5 * sp, s * sp / (2.0 * s + g),
                    std::sqrt(0.5 * (2.0 * s + g) * (4.0 * s + g)), sp / (2.0 * s + g)};
        }
        case Family::SpinBundle: {
            double r = s + g;
            double omx = -std::expm1(-(10.0 / 3.0) * std::log1p(g / s));
            double wdot = std::sqrt(omx);  // 1 - (s/r)^{10/3}, no cancellation
            return {0.3 * r * wdot, 0.3 * r * wdot, std::sqrt(0.45) * r, wdot};
        }
        case Family::G2Circle:
            break;
    }
    throw std::logic_error("gap_triad: family has no closing locus");
}

// d rho / dw after the substitution r = r_min + w^2; the nut/bolt case is
// simplified by hand so the w -> 0 limit is exact
double arc_integrand(Family f, double s, double w) {
    double g = w * w;
    if (f == Family::A8 || f == Family::B8)
        return 2.0 * (2.0 * s + g) / std::sqrt(4.0 * s + g);
    return 2.0 * w / gap_triad(f, s, w).rdot;
}

}  // namespace

std::string MetricFamily::name() const {
    switch (family_) {
        case Family::A8: return "A8";
        case Family::B8: return "B8";
        case Family::SpinBundle: return "spin-bundle";
        case Family::G2Circle: return "g2-circle";
    }
    return "?";
}

double MetricFamily::r_min() const {
    switch (family_) {
        case Family::A8: return scale_;
        case Family::B8: return 3.0 * scale_;
        case Family::SpinBundle: return scale_;
        case Family::G2Circle: return 1.0;
    }
    return 0.0;
}

MetricSample MetricFamily::sample(double r) const {
    if (!(r > r_min()))
        throw std::domain_error("sample: radius outside the family domain");
    RadialTriad p = profile(family_, scale_, r);
    MetricSample out;
    out.r = r;
    out.coef_S4 = p.c.v * p.c.v;
    out.coef_R12 = 4.0 * p.a.v * p.a.v;
    out.coef_R3 = 4.0 * p.b.v * p.b.v;
    out.drdt = p.rdot.v;
    out.g_rr = 1.0 / (p.rdot.v * p.rdot.v);
    out.triad = triad_from_radial(p.a, p.b, p.c, p.rdot);
    return out;
}

double MetricFamily::arc_length_from_bolt(double r) const {
    // sqrt(g_rr) ~ (r - r_min)^{-1/2} at the closing locus; the w^2
    // substitution makes the integrand regular
    if (family_ == Family::G2Circle)
        throw std::domain_error("arc_length_from_bolt: family has no closing locus here");
    auto integrand = [&](double w) { return arc_integrand(family_, scale_, w); };
    return integrate_adaptive(integrand, 0.0, std::sqrt(r - r_min()), 1e-13, 1e-15).value;
}

BoltData MetricFamily::bolt_data() const {
    if (family_ == Family::G2Circle)
        throw std::domain_error("bolt_data: not provided for the product family");
    BoltData out;
    out.r_bolt = r_min();

    // invert rho(w) by bisection in the gap variable w = sqrt(r - r_bolt);
    // bisecting in r would round the gap away long before rho reaches the
    // resolution the rate measurements need
    auto arc_w = [&](double w) {
        auto integrand = [&](double u) { return arc_integrand(family_, scale_, u); };
        return integrate_adaptive(integrand, 0.0, w, 1e-13, 1e-15).value;
    };
    auto w_at_rho = [&](double rho) {
        double lo = 0.0, hi = std::sqrt(std::max(scale_, 1.0));
        while (arc_w(hi) < rho) hi *= 2.0;
        for (int i = 0; i < 200; ++i) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (arc_w(mid) < rho ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    // rates from a point deep in the collapse region, exponents from a
    // two-point log fit further out
    double unit = std::max(scale_, 1e-6);
    double rho0 = 1e-6 * unit, rho1 = 1e-3 * unit, rho2 = 1e-4 * unit;
    GapTriad t0 = gap_triad(family_, scale_, w_at_rho(rho0));
    GapTriad t1 = gap_triad(family_, scale_, w_at_rho(rho1));
    GapTriad t2 = gap_triad(family_, scale_, w_at_rho(rho2));
    auto fit = [&](double x1, double x2) { return std::log(x1 / x2) / std::log(rho1 / rho2); };

    if (family_ == Family::A8) {
        // the whole S^7 collapses: a genuine point, all three exponents fit
        out.s4_radius_sq = 0.0;
        out.rates = {t0.a / rho0, t0.b / rho0, t0.c / rho0};
        out.exponents = {fit(t1.a, t2.a), fit(std::fabs(t1.b), std::fabs(t2.b)),
                         fit(t1.c, t2.c)};
    } else {
        // S^3 collapse over an S^4 bolt; c stays finite (exponent slot 0)
        double c_bolt = family_ == Family::B8 ? 2.0 * scale_ : std::sqrt(0.45) * scale_;
        out.s4_radius_sq = c_bolt * c_bolt;
        out.rates = {t0.a / rho0, t0.b / rho0, (t0.c - c_bolt) / rho0};
        out.exponents = {fit(t1.a, t2.a), fit(t1.b, t2.b), 0.0};
    }
    return out;
}

InterpolationReport MetricFamily::interpolation_report() const {
    double r = 1e8 * std::max(scale_, 1.0);
    MetricSample s = sample(r);
    InterpolationReport out;
    out.a_slope_infinity = s.triad.a / r;
    out.c_slope_infinity = s.triad.c / r;
    out.b_infinity = s.triad.b;
    out.circle_radius_sq = 4.0 * s.triad.b * s.triad.b;
    out.cone_ratio = s.coef_R12 / s.coef_S4;
    return out;
}

FamilySquares MetricFamily::squares(Family f, const Rational& r, const Rational& scale) {
    Rational l = scale;
    if (f == Family::B8) l = -scale;
    if (f != Family::A8 && f != Family::B8)
        throw std::domain_error("squares: exact sampling only for the nut/bolt families");
    Rational P = (r + 3 * l) * (r - l);
    FamilySquares out;
    out.coef_R12 = P;
    out.coef_R3 = 4 * l * l * P / ((r + l) * (r + l));
    out.coef_S4 = (r * r - l * l) / 2;
    out.g_rr = (r + l) * (r + l) / P;
    return out;
}

FamilySquares MetricFamily::spin_bundle_squares_param(const Rational& u,
                                                      const Rational& r0) {
    // r = r0 u^3 makes (r0/r)^{10/3} = u^{-10} rational
    Rational u10 = u * u * u * u * u;
    u10 = u10 * u10;
    Rational r = r0 * u * u * u;
    Rational w = 1 - 1 / u10;
    FamilySquares out;
    out.coef_R12 = Rational(9, 25) * r * r * w;       // 4 a^2
    out.coef_R3 = out.coef_R12;                        // a = b
    out.coef_S4 = Rational(9, 20) * r * r;
    out.g_rr = 1 / w;
    return out;
}

}  // namespace spin7
