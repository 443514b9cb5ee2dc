#pragma once
// Levi-Civita connection and curvature of
//
//   ds^2 = dt^2 + c^2 P_i P_i + 4a^2 (R_1^2 + R_2^2) + 4b^2 R_3^2
//
// in the orthonormal frame. The frame part of the connection is the
// closed-form table below (antisymmetric pairs AB, coefficient along e^C);
// the left-invariant generators appear in omega with constant
// coefficients and must cancel from d omega + omega ^ omega. That
// cancellation is checked, not assumed: riemann() reports the largest
// stray coefficient it had to discard.
//
// Index order: 0..3 the S^4 directions, 4,5 the a-directions of the S^3
// fibre, 6 the b-direction, 7 radial.

#include <array>
#include <cstdlib>

#include "spin7/forms.hpp"
#include "spin7/jet.hpp"

namespace spin7 {

template <class T>
using Matrix8 = std::array<std::array<T, 8>, 8>;

// frame connection coefficient omega_{AB,C} as a 1-jet in t
template <class T>
Jet1<T> connection_entry(int A, int B, int C, const TriadJet<T>& tr) {
    if (A == B) return Jet1<T>(T(0));
    if (A > B) return -connection_entry(B, A, C, tr);

    const Jet1<T> a = tr.ja(), b = tr.jb(), c = tr.jc();
    const Jet1<T> half(T(1) / T(2));
    const Jet1<T> a_2c2 = a / (Jet1<T>(T(2)) * c * c);
    const Jet1<T> b_2c2 = b / (Jet1<T>(T(2)) * c * c);
    const Jet1<T> b_2a2 = b / (Jet1<T>(T(2)) * a * a);
    auto is = [&](int x, int y, int z) { return A == x && B == y && C == z; };

    // radial derivatives
    if (is(0, 7, 0) || is(1, 7, 1) || is(2, 7, 2) || is(3, 7, 3)) return tr.jdc() / c;
    if (is(4, 7, 4) || is(5, 7, 5)) return tr.jda() / a;
    if (is(6, 7, 6)) return tr.jdb() / b;
    // mixed S^4 / fibre
    if (is(1, 4, 0) || is(2, 5, 0)) return -a_2c2;
    if (is(3, 6, 0)) return -b_2c2;
    if (is(0, 4, 1) || is(3, 5, 1)) return a_2c2;
    if (is(2, 6, 1)) return -b_2c2;
    if (is(0, 5, 2)) return a_2c2;
    if (is(3, 4, 2)) return -a_2c2;
    if (is(1, 6, 2)) return b_2c2;
    if (is(2, 4, 3)) return a_2c2;
    if (is(1, 5, 3)) return -a_2c2;
    if (is(0, 6, 3)) return b_2c2;
    // within the fibre and back onto the base
    if (is(0, 1, 4) || is(2, 3, 4)) return a_2c2 - half / a;
    if (is(5, 6, 4)) return -b_2a2;
    if (is(0, 2, 5)) return a_2c2 - half / a;
    if (is(1, 3, 5)) return half / a - a_2c2;
    if (is(4, 6, 5)) return b_2a2;
    if (is(0, 3, 6) || is(1, 2, 6)) return b_2c2 - half / b;
    if (is(4, 5, 6)) return b_2a2 - Jet1<T>(T(1)) / b;
    return Jet1<T>(T(0));
}

// full connection 1-forms over the coframe (frame part dressed with the
// scales, plus the constant left-invariant part)
template <class T>
std::array<std::array<Form<Jet1<T>>, 8>, 8> connection_forms(const TriadJet<T>& tr) {
    std::array<std::array<Form<Jet1<T>>, 8>, 8> om;
    auto scales = frame_scales_jet(tr);
    for (int A = 0; A < 8; ++A)
        for (int B = A + 1; B < 8; ++B) {
            Form<Jet1<T>> w;
            for (int C = 0; C < 8; ++C) {
                Jet1<T> e = connection_entry(A, B, C, tr);
                if (e.v == T(0) && e.d == T(0)) continue;
                form_add_term(w, gen_bit(C), e * scales[C]);
            }
            om[A][B] = w;
        }
    // left-invariant part: omega_{0i} -= L_i, omega_{jk} += eps_{ijk} L_i
    auto addL = [&](int A, int B, int Lgen, int sign) {
        form_add_term(om[A][B], gen_bit(Lgen), Jet1<T>(T(sign)));
    };
    addL(0, 1, 8, -1);
    addL(0, 2, 9, -1);
    addL(0, 3, 10, -1);
    addL(2, 3, 8, 1);
    addL(1, 3, 9, -1);
    addL(1, 2, 10, 1);
    for (int A = 0; A < 8; ++A)
        for (int B = 0; B < A; ++B) {
            Form<Jet1<T>> neg;
            for (const auto& [m, v] : om[B][A]) neg.emplace(m, -v);
            om[A][B] = neg;
        }
    return om;
}

template <class T>
struct RiemannData {
    // frame components R_{ABCD} = coefficient of e^C ^ e^D in the
    // curvature 2-form of the pair (A,B)
    std::array<std::array<Matrix8<T>, 8>, 8> r{};
    // largest left-invariant or conversion residue (must vanish)
    T stray{};
};

template <class T>
RiemannData<T> riemann(const TriadJet<T>& tr) {
    auto om = connection_forms(tr);
    auto scales = frame_scales(tr);
    RiemannData<T> out;
    out.stray = T(0);
    auto absT = [](const T& x) { return x < T(0) ? T(-x) : x; };
    for (int A = 0; A < 8; ++A)
        for (int B = A + 1; B < 8; ++B) {
            Form<T> R = d_t(om[A][B]);
            for (int C = 0; C < 8; ++C) {
                if (C == A || C == B) continue;
                R = R + wedge(values(om[A][C]), values(om[C][B]));
            }
            for (const auto& [m, v] : R) {
                if (m & ~FRAME_MASK) {
                    T av = absT(v);
                    if (out.stray < av) out.stray = av;
                    continue;
                }
                int c_lo = std::countr_zero(m);
                Mask rest = m & Mask(m - 1);
                int c_hi = std::countr_zero(rest);
                T coef = v / (T(scales[c_lo]) * T(scales[c_hi]));
                out.r[A][B][c_lo][c_hi] = coef;
                out.r[A][B][c_hi][c_lo] = -coef;
                out.r[B][A][c_lo][c_hi] = -coef;
                out.r[B][A][c_hi][c_lo] = coef;
            }
        }
    return out;
}

template <class T>
Matrix8<T> ricci(const RiemannData<T>& rm) {
    Matrix8<T> ric{};
    for (int B = 0; B < 8; ++B)
        for (int D = 0; D < 8; ++D) {
            T s(0);
            for (int A = 0; A < 8; ++A) s += rm.r[A][B][A][D];
            ric[B][D] = s;
        }
    return ric;
}

template <class T>
Matrix8<T> ricci(const TriadJet<T>& tr) {
    return ricci(riemann(tr));
}

double ricci_flat_residual(const TriadJet<double>& tr);
double max_abs_riemann(const TriadJet<double>& tr);

}  // namespace spin7
