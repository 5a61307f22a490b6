#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>

#include "hhbar/constants.hpp"

namespace hhbar::potential {

enum class Flavor { bo, mass_scaled };

// Analytic fit of a nuclear interaction curve:
//
//   V(R) = E_inf + (E_sr - E_inf - 1/R) exp(-beta R^2)
//          + sum_{n=1..6} sum_{k=0..4} A[n][k] R^k exp(-alpha[n] R^2)
//
// subject to sum_n A[n][0] = 0, which makes V(R) -> E_sr - 1/R for R -> 0.
// Units: A[n][k] in hartree bohr^-k, alpha and beta in bohr^-2.
struct PotentialModel {
  Flavor flavor = Flavor::bo;
  std::array<std::array<double, 5>, 6> A{};  // A[n-1][k]
  std::array<double, 6> alpha{};
  double beta = 1.0;
  double E_inf = 0.0;  // dissociation threshold
  double E_sr = 0.0;   // short-range constant in the Coulomb-Gaussian term
};

// Built-in fit parameters. The k = 0 coefficient of the sixth Gaussian is not
// part of the stored table; it is completed from the sum-rule constraint at
// load time so the constraint holds identically.
PotentialModel load_builtin(Flavor flavor);

// Built-in parameters with selected values replaced from a text file of
// "name = value" lines. Recognised names: A_nk (n=1..6, k=0..4, except A_60),
// alpha_n (n=1..6), beta. '#' starts a comment. A_60 is re-derived from the
// constraint after all overrides are applied.
PotentialModel load_with_overrides(Flavor flavor, const std::string& path);

double eval(const PotentialModel& model, double R);

// Analytic d^order/dR^order of the fit, 1 <= order <= 4.
double eval_derivative(const PotentialModel& model, double R, int order);

// E_sr - 1/R with E_sr fixed by the flavor.
double short_range_reference(const PhysicalConstants& constants, double R, Flavor flavor);

// E_inf - sum_n C_n / R^n over a (possibly empty) list of (n, C_n) pairs.
double long_range_reference(double E_inf, std::span<const std::pair<int, double>> C, double R);

// (R, E) -> (R/mu, mu E): maps a point of the unscaled curve onto the
// mass-scaled one.
std::pair<double, double> mass_scale_grid_point(double R, double E_BO_value,
                                                const PhysicalConstants& constants);

// V_scaled(R) - V_BO(R) in millihartree.
double delta_lep(const PotentialModel& scaled, const PotentialModel& bo, double R);

// Remainder series of the scaled curve beyond the monomer correction,
//   sum_{n=2..n_max_terms} (-1/m_p)^n sum_{k=0..n} (n!/k!)^2 R^k/(n-k)! V^(k)(R),
// truncated at n_max_terms <= 4 (limited by the available derivatives).
double nonadiabatic_series(const PotentialModel& bo_model, double R, int n_max_terms,
                           const PhysicalConstants& constants = {});

// Two-body Coulomb level -m_p/(4 nu^2) of the proton-antiproton system.
double protonium_level(int nu, const PhysicalConstants& constants = {});

}  // namespace hhbar::potential
