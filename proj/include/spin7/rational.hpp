#pragma once
// Exact arithmetic used by the rational-mode paths: structure constants,
// closed-form metric coefficients and harmonic triples are all rational
// functions, so identities can be checked with zero tolerance.

#include <boost/multiprecision/cpp_int.hpp>

namespace spin7 {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace spin7
