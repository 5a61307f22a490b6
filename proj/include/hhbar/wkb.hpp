#pragma once

#include <optional>
#include <span>

namespace hhbar::wkb {

// Tail data for the semiclassical quantization of a potential with a
// -C6/R^6 tail. beta6 = (2 C6 M)^(1/4) sets the length scale; the mean
// scattering length and the threshold length coincide for this tail,
// a_bar = b = 0.4779888 beta6. The constants d and D are not derivable here;
// they are supplied by the caller or calibrated against known threshold
// quantum numbers.
struct TailParams {
  double C6 = 0.0;     // hartree bohr^6
  double M = 0.0;      // nuclear reduced mass, a.u.
  double beta6 = 0.0;  // bohr
  double b = 0.0;      // bohr
  double a_bar = 0.0;  // bohr
  std::optional<double> d;  // bohr
  std::optional<double> D;  // dimensionless
};

double beta6(double C6, double M);

TailParams tail_from_c6(double C6, double M);

// C6 recovered as beta6^4 / (2M).
TailParams tail_from_beta6(double beta6_value, double M);

// Quantization function F(eps) for the -6 tail, with kappa = sqrt(2 M eps):
//
//   F = [2 b kappa - (d kappa)^2] / (2 pi [1 + (kappa beta6)^4])
//     + (kappa beta6)^4 / [1 + (kappa beta6)^4]
//       * [ -1/8 + D / (2 pi (kappa beta6)^(2/3))
//           + Gamma(2/3) (kappa beta6)^(2/3) / (4 sqrt(pi) Gamma(7/6)) ].
//
// F(0) = 0. Requires d and D to be present.
double quantization_function(double eps, const TailParams& params);

// nu + F(eps_nu); its floor predicts the number of bound states.
double threshold_quantum_number(int nu, double eps_nu, const TailParams& params);

// a = a_bar + b / tan(pi F(eps_last)); integer F is a zero-energy resonance
// pole and raises an error.
double wkb_scattering_length(double eps_last, const TailParams& params);

struct CalibrationRow {
  int nu = 0;
  double eps = 0.0;           // dissociation energy, hartree
  double nu_th_target = 0.0;  // known threshold quantum number
};

struct CalibrationResult {
  TailParams params;        // input params with d and D filled in
  double rms_residual = 0.0;
  bool d_unidentified = false;  // d^2 direction fell below the rank cutoff
};

// Least-squares fit of (d^2, D) so that nu + F(eps_nu) matches the targets.
// F is linear in d^2 and in D, so the fit is a 2x2 normal-equation solve with
// eigenvalue truncation; a well-posed fit needs rows near threshold, where
// the d^2 term is not negligible.
CalibrationResult calibrate_tail_constants(std::span<const CalibrationRow> rows,
                                           const TailParams& base);

}  // namespace hhbar::wkb
