#pragma once
// Middle-dimension L2 harmonic forms on the asymptotically conical and
// circle-fibred families. A form in the invariant ansatz is determined by
// three radial profiles u = (u1, u2, u3); the builder assembles
// G = omega(u) + s * star omega(u), so s is the Hodge eigenvalue of G.
//
// Label convention: the branches are named by (family, Minus/Plus). The
// builder sign is s = +1 for Minus and s = -1 for Plus; the pairing
// (A8, Plus) admits no decaying solution regular at the nut and the
// closed-form accessors refuse it.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "spin7/families.hpp"
#include "spin7/forms.hpp"
#include "spin7/jet.hpp"
#include "spin7/rational.hpp"

namespace spin7 {

enum class DualityLabel { Minus, Plus };

inline int builder_sign(DualityLabel lab) { return lab == DualityLabel::Minus ? +1 : -1; }
inline const char* duality_name(DualityLabel lab) {
    return lab == DualityLabel::Minus ? "minus" : "plus";
}

// true except for (A8, Plus)
bool normalisable(Family fam, DualityLabel lab);

// closed-form radial profiles at unit scale; T is double, Jet1<double>
// (analytic r-derivative) or Rational (exact mode)
template <class T>
std::array<T, 3> middle_form_profile(Family fam, DualityLabel lab, const T& r) {
    if (!normalisable(fam, lab))
        throw std::domain_error("(A8, plus): no normalisable middle form");
    std::array<T, 3> u;
    if (fam == Family::A8) {
        T p1 = r + T(1), p3 = r + T(3);
        T p1_2 = p1 * p1, p1_3 = p1_2 * p1;
        T p3_3 = p3 * p3 * p3;
        u[0] = T(2) / (p1_3 * p3);
        u[1] = -((r + T(10)) * r + T(13)) / (p1_3 * p3_3);
        u[2] = -T(2) / (p1_2 * p3_3);
        return u;
    }
    if (fam != Family::B8)
        throw std::domain_error("middle forms live on the A8 and B8 families");
    T m1 = r - T(1), p1 = r + T(1);
    T m1_2 = m1 * m1, m1_3 = m1_2 * m1;
    T p1_2 = p1 * p1, p1_4 = p1_2 * p1_2, p1_5 = p1_4 * p1;
    if (lab == DualityLabel::Minus) {
        u[0] = T(2) * ((((r + T(8)) * r + T(34)) * r - T(48)) * r + T(21)) / (m1_3 * p1_5);
        u[1] = -((((r + T(4)) * r - T(18)) * r + T(52)) * r - T(23)) / (m1_3 * p1_5);
        u[2] = T(2) * ((r + T(14)) * r - T(11)) / (m1_2 * p1_5);
    } else {
        u[0] = -T(2) * (((T(5) * r - T(9)) * r + T(15)) * r - T(3)) / (m1_3 * p1_4);
        u[1] = (r - T(3)) * ((T(5) * r - T(2)) * r + T(1)) / (m1_3 * p1_4);
        u[2] = -T(2) * (r - T(3)) / (m1_2 * p1_4);
    }
    return u;
}

// pointwise norm and inner product induced on profiles by the frame metric
template <class T>
T profile_norm_squared(const std::array<T, 3>& u) {
    return T(48) * (u[0] * u[0] + T(2) * u[1] * u[1] + T(4) * u[2] * u[2]);
}
template <class T>
T profile_inner(const std::array<T, 3>& u, const std::array<T, 3>& w) {
    return T(48) * (u[0] * w[0] + T(2) * u[1] * w[1] + T(4) * u[2] * w[2]);
}

// |G|^2 as a single rational expression in r (equals
// profile_norm_squared of the closed-form profiles identically)
template <class T>
T norm_polynomial(Family fam, DualityLabel lab, const T& r) {
    if (!normalisable(fam, lab))
        throw std::domain_error("(A8, plus): no normalisable middle form");
    if (fam == Family::A8) {
        T num = (((T(3) * r + T(44)) * r + T(242)) * r + T(492)) * r + T(339);
        T p1 = r + T(1), p3 = r + T(3);
        T p1_3 = p1 * p1 * p1, p3_3 = p3 * p3 * p3;
        return T(96) * num / (p1_3 * p1_3 * p3_3 * p3_3);
    }
    if (fam != Family::B8)
        throw std::domain_error("middle forms live on the A8 and B8 families");
    T m1 = r - T(1), p1 = r + T(1);
    T m1_3 = m1 * m1 * m1;
    T m1_6 = m1_3 * m1_3;
    T p1_2 = p1 * p1, p1_4 = p1_2 * p1_2, p1_8 = p1_4 * p1_4;
    if (lab == DualityLabel::Minus) {
        T num = (((((((T(3) * r + T(40)) * r + T(252)) * r + T(1064)) * r + T(2506)) * r -
                   T(12936)) * r + T(18284)) * r - T(10824)) * r + T(2379);
        return T(96) * num / (m1_6 * p1_8 * p1_2);
    }
    T num = (((((T(75) * r - T(350)) * r + T(829)) * r - T(932)) * r + T(885)) * r -
             T(414)) * r + T(99);
    return T(96) * num / (m1_6 * p1_8);
}

// the 4-form in the orthonormal frame
Form<double> middle_form(const std::array<double, 3>& u, int s);

// eigenvalue of the Hodge star on a (anti-)self-dual 4-form
double hodge_eigenvalue(const Form<double>& G);

// t-derivative of the profiles demanded by closure and co-closure of G
template <class T>
std::array<T, 3> middle_form_rate(const std::array<T, 3>& u, int s, const TriadJet<T>& m) {
    T a = m.a, b = m.b, c = m.c;
    T da = m.da, db = m.db, dc = m.dc;
    T sT = T(s);
    T c2 = c * c;
    std::array<T, 3> du;
    du[0] = (sT * (T(2) * b * c2 * u[1] - T(4) * a * c2 * u[2]) -
             T(4) * c2 * c * dc * u[0]) / (c2 * c2);
    du[1] = (sT * (a * a * b * u[0] - b * c2 * u[1] - T(2) * a * c2 * u[2]) -
             (T(2) * a * da * c2 + T(2) * a * a * c * dc) * u[1]) / (a * a * c2);
    du[2] = (-sT * (a * a * b * u[0] + b * c2 * u[1]) -
             (da * b * c2 + a * db * c2 + T(2) * a * b * c * dc) * u[2]) / (a * b * c2);
    return du;
}

// how far the closed-form profiles are from satisfying the radial system at r
double profile_system_residual(Family fam, DualityLabel lab, double r);

// integral of |G|^2 over the manifold divided by the volume of the
// principal orbit factor; computed with the measure a^2 c^4 dr at unit scale
double l2_norm_integral(Family fam, DualityLabel lab);

// transport of the decaying solution inward from r_far toward the bolt.
// For a normalisable branch the result is compared against the closed form
// after fixing one overall constant; for (A8, Plus) every decaying seed
// leaves the regular set and the transport reports the blow-up instead.
struct TransportResult {
    bool l2;
    double match_error;        // max relative deviation at the checkpoints
    double matched_constant;
    std::string note;
};
TransportResult transport_from_infinity(Family fam, DualityLabel lab, double r_far = 400.0);

// exact search for a linear relation w . u(r) = 0 holding at all radii
struct RelationProbe {
    bool has_relation;
    std::array<long long, 3> coeffs;  // primitive, leading entry positive
};
RelationProbe relation_probe(Family fam, DualityLabel lab);

// potential 3-form with dB = G on the nut family (Minus branch), in
// coframe monomials: generator directions are exact, dt carries the bit 7
Form<double> b3_potential(double r);
Form<Rational> b3_potential_exact(const Rational& r);
double b3_norm_squared(double r);
Rational b3_norm_squared_exact(const Rational& r);
double b3_closure_residual(double r);   // max |dB - G| over frame coefficients

// fitted vanishing order of |B|^2 at the nut, in the coordinate gap r - 1
// and in arc length from the nut
double b3_vanishing_order_in_gap();
double b3_vanishing_order_in_arclength();

}  // namespace spin7
