#pragma once
// Real Clifford algebra of R^8 acting on 16-component spinors, built from
// octonion left multiplication. One chirality carries the invariant spinor;
// everything downstream (the Cayley 4-form, the holonomy projectors, the
// derivative operators along a triad) is derived from these matrices.

#include <array>

#include "spin7/curvature.hpp"
#include "spin7/forms.hpp"
#include "spin7/jet.hpp"

namespace spin7 {

using IMat16 = std::array<std::array<int, 16>, 16>;
using Mat16 = std::array<std::array<double, 16>, 16>;
using Vec16 = std::array<double, 16>;
using IVec16 = std::array<int, 16>;

// generators: integer matrices with {G_A, G_B} = 2 delta_AB, A = 0..7
const std::array<IMat16, 8>& gamma_matrices();

IMat16 gamma_product(int A, int B);
IMat16 gamma_product4(int A, int B, int C, int D);

// chirality element G_0 G_1 ... G_7; the invariant spinor sits in its -1 eigenspace
IMat16 gamma_chirality();

// max |{G_A,G_B} - 2 delta_AB I| over all 36 pairs; zero when the algebra closes
int anticommutator_defect();

// the fifteen second-order structures that cut the invariant spinor out of
// the 16-dimensional space; integer linear combinations of G_A G_B
const std::array<IMat16, 15>& holonomy_operators();

// joint kernel of the holonomy operators. Computed by exact rational
// elimination, required to be one-dimensional, returned as a primitive
// integer vector with positive leading entry.
IVec16 parallel_spinor();

// max over the fifteen operators of |O eta| (unit-normalised eta)
double max_annihilation_residual();

// spinor derivative operator along frame direction C for the given triad:
// sum over A<B of omega_{AB,C} G_A G_B
Mat16 covariant_derivative_operator(const TriadJet<double>& t, int C);

// max over the eight frame directions of |O_C eta|; vanishes exactly on
// triads satisfying the first-order system
double spinor_derivative_residual(const TriadJet<double>& t);

// the self-dual Cayley 4-form in the orthonormal frame, assembled as the
// spinor bilinear eta^T G_{ABCD} eta over all index quadruples
Form<double> cayley_form();
double cayley_coefficient(int A, int B, int C, int D);

// evaluate a frame 4-form on four frame vectors (sum of 4x4 minors)
double form_on_vectors(const Form<double>& phi,
                       const std::array<std::array<double, 8>, 4>& X);

// Gram-Schmidt in place; returns false if the four vectors are degenerate
bool orthonormalize(std::array<std::array<double, 8>, 4>& X);

}  // namespace spin7
