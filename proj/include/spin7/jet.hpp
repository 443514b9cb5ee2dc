#pragma once
// 1- and 2-jets in a single variable. Metric coefficients get pushed
// through jet arithmetic so every derivative the curvature needs is
// analytic; nothing in the library finite-differences a triad.
// T is double in production and an exact rational in the exact-mode tests.

#include <cmath>

namespace spin7 {

template <class T>
struct Jet1 {
    T v{};  // value
    T d{};  // first derivative

    Jet1() = default;
    Jet1(T value) : v(value), d(T(0)) {}
    Jet1(T value, T deriv) : v(value), d(deriv) {}

    Jet1 operator-() const { return {-v, -d}; }

    friend Jet1 operator+(const Jet1& x, const Jet1& y) { return {x.v + y.v, x.d + y.d}; }
    friend Jet1 operator-(const Jet1& x, const Jet1& y) { return {x.v - y.v, x.d - y.d}; }
    friend Jet1 operator*(const Jet1& x, const Jet1& y) { return {x.v * y.v, x.d * y.v + x.v * y.d}; }
    friend Jet1 operator/(const Jet1& x, const Jet1& y) {
        T q = x.v / y.v;
        return {q, (x.d - q * y.d) / y.v};
    }
    friend Jet1 operator*(const T& s, const Jet1& x) { return {s * x.v, s * x.d}; }
    friend Jet1 operator*(const Jet1& x, const T& s) { return {x.v * s, x.d * s}; }
    friend Jet1 operator/(const Jet1& x, const T& s) { return {x.v / s, x.d / s}; }

    Jet1& operator+=(const Jet1& y) { v += y.v; d += y.d; return *this; }
    Jet1& operator-=(const Jet1& y) { v -= y.v; d -= y.d; return *this; }

    friend bool operator==(const Jet1& x, const Jet1& y) { return x.v == y.v && x.d == y.d; }
    friend bool operator!=(const Jet1& x, const Jet1& y) { return !(x == y); }
};

template <class T>
struct Jet2 {
    T v{};   // value
    T d1{};  // first derivative
    T d2{};  // second derivative

    Jet2() = default;
    Jet2(T value) : v(value), d1(T(0)), d2(T(0)) {}
    Jet2(T value, T first, T second = T(0)) : v(value), d1(first), d2(second) {}

    // the independent variable itself
    static Jet2 variable(T value) { return {value, T(1), T(0)}; }

    Jet2 operator-() const { return {-v, -d1, -d2}; }

    friend Jet2 operator+(const Jet2& x, const Jet2& y) { return {x.v + y.v, x.d1 + y.d1, x.d2 + y.d2}; }
    friend Jet2 operator-(const Jet2& x, const Jet2& y) { return {x.v - y.v, x.d1 - y.d1, x.d2 - y.d2}; }
    friend Jet2 operator*(const Jet2& x, const Jet2& y) {
        return {x.v * y.v,
                x.d1 * y.v + x.v * y.d1,
                x.d2 * y.v + T(2) * x.d1 * y.d1 + x.v * y.d2};
    }
    friend Jet2 operator/(const Jet2& x, const Jet2& y) {
        T q = x.v / y.v;
        T q1 = (x.d1 - q * y.d1) / y.v;
        T q2 = (x.d2 - T(2) * q1 * y.d1 - q * y.d2) / y.v;
        return {q, q1, q2};
    }
    friend Jet2 operator*(const T& s, const Jet2& x) { return {s * x.v, s * x.d1, s * x.d2}; }
    friend Jet2 operator*(const Jet2& x, const T& s) { return {x.v * s, x.d1 * s, x.d2 * s}; }
    friend Jet2 operator/(const Jet2& x, const T& s) { return {x.v / s, x.d1 / s, x.d2 / s}; }

    Jet2& operator+=(const Jet2& y) { v += y.v; d1 += y.d1; d2 += y.d2; return *this; }
};

inline Jet2<double> sqrt(const Jet2<double>& x) {
    double s = std::sqrt(x.v);
    double s1 = x.d1 / (2.0 * s);
    double s2 = x.d2 / (2.0 * s) - x.d1 * x.d1 / (4.0 * s * x.v);
    return {s, s1, s2};
}

inline Jet2<double> pow(const Jet2<double>& x, double p) {
    double f = std::pow(x.v, p);
    double f1 = p * std::pow(x.v, p - 1.0);
    double f2 = p * (p - 1.0) * std::pow(x.v, p - 2.0);
    return {f, f1 * x.d1, f2 * x.d1 * x.d1 + f1 * x.d2};
}

// radial profile of a metric function: value, d/dr, d^2/dr^2
using RadialJet = Jet2<double>;

// Triad (a, b, c) of the cohomogeneity-one metric with first and second
// derivatives in the arc-length variable t. The sign of b is meaningful
// and must be preserved.
template <class T = double>
struct TriadJet {
    T a{}, b{}, c{};
    T da{}, db{}, dc{};
    T d2a{}, d2b{}, d2c{};

    Jet1<T> ja() const { return {a, da}; }
    Jet1<T> jb() const { return {b, db}; }
    Jet1<T> jc() const { return {c, dc}; }
    // jets of the first derivatives (value = rate, derivative = second rate)
    Jet1<T> jda() const { return {da, d2a}; }
    Jet1<T> jdb() const { return {db, d2b}; }
    Jet1<T> jdc() const { return {dc, d2c}; }
};

// chain rule: triad given as 2-jets in r plus the 2-jet of dr/dt
template <class T>
TriadJet<T> triad_from_radial(const Jet2<T>& a, const Jet2<T>& b, const Jet2<T>& c,
                              const Jet2<T>& rdot) {
    TriadJet<T> out;
    out.a = a.v;  out.b = b.v;  out.c = c.v;
    out.da = a.d1 * rdot.v;
    out.db = b.d1 * rdot.v;
    out.dc = c.d1 * rdot.v;
    // d2/dt2 = (f'' rdot + f' rdot') rdot
    out.d2a = (a.d2 * rdot.v + a.d1 * rdot.d1) * rdot.v;
    out.d2b = (b.d2 * rdot.v + b.d1 * rdot.d1) * rdot.v;
    out.d2c = (c.d2 * rdot.v + c.d1 * rdot.d1) * rdot.v;
    return out;
}

}  // namespace spin7
