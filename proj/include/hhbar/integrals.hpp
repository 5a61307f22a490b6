#pragma once

#include <complex>
#include <span>

#include "hhbar/basis.hpp"
#include "hhbar/matrix.hpp"
#include "hhbar/parallel.hpp"
#include "hhbar/potential.hpp"

namespace hhbar::integrals {

// Gaussian moment with complex exponent,
//   moment(m, z) = int_0^inf R^m exp(-z R^2) dR = Gamma((m+1)/2) / (2 z^((m+1)/2)),
// principal branch; requires Re(z) > 0.
std::complex<double> moment(int m, std::complex<double> z);

// <g_i | g_j> under the R^2 dR measure. Both functions must share l and
// alpha_osc.
double overlap_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj);

// Matrix element of the radial kinetic operator
//   -1/(2 mu_n) d^2/dR^2 - 1/(mu_n R) d/dR + l(l+1)/(2 mu_n R^2),
// computed in the symmetrized form
//   (1/(2 mu_n)) [ int g_i' g_j' R^2 dR + l(l+1) int g_i g_j dR ],
// equal to the operator form after integration by parts for these
// boundary-vanishing functions.
double kinetic_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj,
                       double mu_n);

// <g_i | V | g_j> for the Gaussian-polynomial + Coulomb-Gaussian fit family.
double potential_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj,
                         const potential::PotentialModel& model);

struct RadialMatrices {
  Matrix S, T, V;
};

// Assembles overlap, kinetic and potential matrices over the basis. Only the
// upper triangle is computed; the mirror makes the matrices exactly symmetric.
RadialMatrices assemble_matrices(std::span<const basis::BasisFunction> fs,
                                 const potential::PotentialModel& model, double mu_n,
                                 ExecMode mode = ExecMode::parallel);

}  // namespace hhbar::integrals
