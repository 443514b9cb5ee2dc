#pragma once
// Invariant exterior algebra over the 11-generator coframe
//
//   0..3   P_i   coset 1-forms of the S^7 = SO(5)/SU(2) orbit
//   4..6   R_i   right-invariant 1-forms on the S^3 fibre (enter the metric)
//   7      dt    arc-length direction
//   8..10  L_i   left-invariant su(2) counterparts (enter the structure
//                equations but never the metric; curvature must shed them)
//
// A monomial is a bitmask over the generators, so wedge signs reduce to
// inversion counts. Coefficients form any commutative ring: double, exact
// rationals, or 1-jets when the exterior derivative needs time derivatives.
//
// Orthonormal frame: e^i = c P_i, e^{3+i} = 2a R_i (i=1,2), e^6 = 2b R_3,
// e^7 = dt. Orientation sigma = -1: *(e^0123) = -e^{4567} and ** = +1 on
// 4-forms.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "spin7/jet.hpp"

namespace spin7 {

using Mask = std::uint16_t;

inline constexpr int NGEN = 11;
inline constexpr int GEN_DT = 7;
inline constexpr Mask FRAME_MASK = 0xFF;   // generators 0..7
inline constexpr Mask gen_bit(int g) { return Mask(1) << g; }

inline int form_grade(Mask m) { return std::popcount(m); }

// inversions of the concatenation (I, J), both ascending
inline int crossings(Mask I, Mask J) {
    int n = 0;
    while (J) {
        int j = std::countr_zero(J);
        n += std::popcount(Mask(I >> (j + 1)));
        J &= Mask(J - 1);
    }
    return n;
}

// 0 if the monomials share a generator, else the sign of e_I ^ e_J
inline int wedge_sign(Mask I, Mask J) {
    if (I & J) return 0;
    return (crossings(I, J) & 1) ? -1 : 1;
}

template <class C>
using Form = std::map<Mask, C>;

template <class C>
void form_add_term(Form<C>& F, Mask m, const C& v) {
    auto it = F.find(m);
    if (it == F.end()) {
        F.emplace(m, v);
    } else {
        it->second += v;
        if (it->second == C(0)) F.erase(it);
    }
}

template <class C>
Form<C> operator+(const Form<C>& A, const Form<C>& B) {
    Form<C> out = A;
    for (const auto& [m, v] : B) form_add_term(out, m, v);
    return out;
}

template <class C>
Form<C> operator-(const Form<C>& A, const Form<C>& B) {
    Form<C> out = A;
    for (const auto& [m, v] : B) form_add_term(out, m, C(-v));
    return out;
}

template <class C>
Form<C> operator*(const C& s, const Form<C>& A) {
    Form<C> out;
    if (s == C(0)) return out;
    for (const auto& [m, v] : A) out.emplace(m, s * v);
    return out;
}

template <class C>
Form<C> wedge(const Form<C>& A, const Form<C>& B) {
    Form<C> out;
    for (const auto& [ma, va] : A)
        for (const auto& [mb, vb] : B) {
            int s = wedge_sign(ma, mb);
            if (!s) continue;
            C term = va * vb;
            if (s < 0) term = -term;
            form_add_term(out, Mask(ma | mb), term);
        }
    return out;
}

// structure constants: d(e_g) as sorted monomials with small rational
// coefficients (num/den)
struct DGenTerm {
    Mask mono;
    int num;
    int den;
};

const std::vector<DGenTerm>& dgen(int g);

template <class C>
C ratio_as(int num, int den) {
    return C(num) / C(den);
}

// exterior derivative, constant coefficients
template <class C>
Form<C> d(const Form<C>& F) {
    Form<C> out;
    for (const auto& [m, f] : F) {
        Mask rest_all = m;
        int pos = 0;
        while (rest_all) {
            int g = std::countr_zero(rest_all);
            rest_all &= Mask(rest_all - 1);
            Mask rest = m & ~gen_bit(g);
            int sgn_pos = (pos & 1) ? -1 : 1;
            for (const DGenTerm& t : dgen(g)) {
                int s = wedge_sign(t.mono, rest);
                if (!s) continue;
                C coef = f * ratio_as<C>(t.num, t.den);
                if (s * sgn_pos < 0) coef = -coef;
                form_add_term(out, Mask(t.mono | rest), coef);
            }
            ++pos;
        }
    }
    return out;
}

// exterior derivative with t-dependent coefficients carried as 1-jets;
// the result collapses to plain values (the jet's derivative feeds the
// dt ^ e_I term and is then spent)
template <class T>
Form<T> d_t(const Form<Jet1<T>>& F) {
    Form<T> out;
    for (const auto& [m, f] : F) {
        int s_dt = wedge_sign(gen_bit(GEN_DT), m);
        if (s_dt) {
            T coef = f.d;
            if (s_dt < 0) coef = -coef;
            form_add_term(out, Mask(gen_bit(GEN_DT) | m), coef);
        }
        Mask rest_all = m;
        int pos = 0;
        while (rest_all) {
            int g = std::countr_zero(rest_all);
            rest_all &= Mask(rest_all - 1);
            Mask rest = m & ~gen_bit(g);
            int sgn_pos = (pos & 1) ? -1 : 1;
            for (const DGenTerm& t : dgen(g)) {
                int s = wedge_sign(t.mono, rest);
                if (!s) continue;
                T coef = f.v * ratio_as<T>(t.num, t.den);
                if (s * sgn_pos < 0) coef = -coef;
                form_add_term(out, Mask(t.mono | rest), coef);
            }
            ++pos;
        }
    }
    return out;
}

template <class T>
Form<T> values(const Form<Jet1<T>>& F) {
    Form<T> out;
    for (const auto& [m, f] : F)
        if (!(f.v == T(0))) out.emplace(m, f.v);
    return out;
}

// Hodge star on frame monomials (generators 0..7 only), orientation -1
template <class C>
Form<C> star_frame(const Form<C>& F) {
    Form<C> out;
    for (const auto& [m, f] : F) {
        if (m & ~FRAME_MASK)
            throw std::invalid_argument("star_frame: monomial outside the frame generators");
        Mask mc = Mask(~m) & FRAME_MASK;
        int s = -wedge_sign(m, mc);  // sigma = -1
        C coef = f;
        if (s < 0) coef = -coef;
        form_add_term(out, mc, coef);
    }
    return out;
}

// orthonormal coframe scale of each frame generator: (c,c,c,c, 2a,2a, 2b, 1)
template <class T>
std::array<T, 8> frame_scales(const TriadJet<T>& tr) {
    T two(2);
    return {tr.c, tr.c, tr.c, tr.c, two * tr.a, two * tr.a, two * tr.b, T(1)};
}

template <class T>
std::array<Jet1<T>, 8> frame_scales_jet(const TriadJet<T>& tr) {
    Jet1<T> a = tr.ja(), b = tr.jb(), c = tr.jc();
    T two(2);
    return {c, c, c, c, two * a, two * a, two * b, Jet1<T>(T(1))};
}

// divide out the scales: coefficients w.r.t. the orthonormal e^A basis.
// Monomials containing L generators are rejected.
template <class C, class S>
Form<C> coframe_to_frame(const Form<C>& F, const std::array<S, 8>& s) {
    Form<C> out;
    for (const auto& [m, f] : F) {
        if (m & ~FRAME_MASK)
            throw std::invalid_argument("coframe_to_frame: left-invariant generator present");
        C coef = f;
        Mask mm = m;
        while (mm) {
            int g = std::countr_zero(mm);
            mm &= Mask(mm - 1);
            coef = coef / C(s[g]);
        }
        out.emplace(m, coef);
    }
    return out;
}

template <class C, class S>
Form<C> frame_to_coframe(const Form<C>& F, const std::array<S, 8>& s) {
    Form<C> out;
    for (const auto& [m, f] : F) {
        C coef = f;
        Mask mm = m & FRAME_MASK;
        while (mm) {
            int g = std::countr_zero(mm);
            mm &= Mask(mm - 1);
            coef = coef * C(s[g]);
        }
        out.emplace(m, coef);
    }
    return out;
}

// tensor-normalised norm of a frame k-form: k! * sum of squared components
template <class C>
C norm_sq_tensor(const Form<C>& F) {
    C acc(0);
    int k = -1;
    for (const auto& [m, f] : F) {
        if (k < 0) k = form_grade(m);
        acc += f * f;
    }
    C fact(1);
    for (int i = 2; i <= k; ++i) fact = fact * C(i);
    return fact * acc;
}

template <class C>
C inner_tensor(const Form<C>& A, const Form<C>& B) {
    C acc(0);
    int k = -1;
    for (const auto& [m, f] : A) {
        auto it = B.find(m);
        if (it == B.end()) continue;
        if (k < 0) k = form_grade(m);
        acc += f * it->second;
    }
    C fact(1);
    for (int i = 2; i <= k; ++i) fact = fact * C(i);
    return fact * acc;
}

template <class C>
C max_abs_coef(const Form<C>& F) {
    C best(0);
    for (const auto& [m, f] : F) {
        C af = f < C(0) ? C(-f) : f;
        if (best < af) best = af;
    }
    return best;
}

}  // namespace spin7
