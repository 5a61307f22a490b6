#include "hhbar/wkb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hhbar/errors.hpp"

namespace hhbar::wkb {
namespace {

constexpr double kMeanLengthRatio = 0.4779888;  // a_bar / beta6 for the -6 tail

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(std::string("wkb: ") + what + " must be positive");
}

struct FParts {
  // F = base + d^2 * cd + D * cD
  double base = 0.0;
  double cd = 0.0;
  double cD = 0.0;
};

FParts f_parts(double eps, const TailParams& p) {
  if (eps < 0.0) throw std::domain_error("wkb: dissociation energy must be non-negative");
  FParts out;
  if (eps == 0.0) return out;
  const double kappa = std::sqrt(2.0 * p.M * eps);
  const double x = kappa * p.beta6;
  const double x4 = x * x * x * x;
  const double x23 = std::cbrt(x * x);
  const double two_pi = 2.0 * std::numbers::pi;
  static const double growth_coeff =
      std::tgamma(2.0 / 3.0) / (4.0 * std::sqrt(std::numbers::pi) * std::tgamma(7.0 / 6.0));
  out.base = 2.0 * p.b * kappa / (two_pi * (1.0 + x4)) +
             x4 / (1.0 + x4) * (-0.125 + growth_coeff * x23);
  out.cd = -kappa * kappa / (two_pi * (1.0 + x4));
  out.cD = x4 / (1.0 + x4) / (two_pi * x23);
  return out;
}

void require_tail_constants(const TailParams& p) {
  if (!p.d.has_value() || !p.D.has_value()) {
    throw numerical_error("wkb: tail constants d and D are not set; supply or calibrate them");
  }
}

}  // namespace

double beta6(double C6, double M) {
  require_positive(C6, "C6");
  require_positive(M, "M");
  return std::pow(2.0 * C6 * M, 0.25);
}

TailParams tail_from_c6(double C6, double M) {
  TailParams p;
  p.C6 = C6;
  p.M = M;
  p.beta6 = beta6(C6, M);
  p.b = kMeanLengthRatio * p.beta6;
  p.a_bar = p.b;
  return p;
}

TailParams tail_from_beta6(double beta6_value, double M) {
  require_positive(beta6_value, "beta6");
  require_positive(M, "M");
  const double b4 = beta6_value * beta6_value * beta6_value * beta6_value;
  TailParams p = tail_from_c6(b4 / (2.0 * M), M);
  p.beta6 = beta6_value;  // keep the supplied value verbatim
  p.b = kMeanLengthRatio * p.beta6;
  p.a_bar = p.b;
  return p;
}

double quantization_function(double eps, const TailParams& params) {
  require_tail_constants(params);
  const FParts f = f_parts(eps, params);
  const double d = *params.d;
  return f.base + d * d * f.cd + *params.D * f.cD;
}

double threshold_quantum_number(int nu, double eps_nu, const TailParams& params) {
  return static_cast<double>(nu) + quantization_function(eps_nu, params);
}

double wkb_scattering_length(double eps_last, const TailParams& params) {
  const double F = quantization_function(eps_last, params);
  if (std::abs(F - std::round(F)) < 1e-9) {
    throw numerical_error("wkb: F at an integer, zero-energy resonance pole");
  }
  return params.a_bar + params.b / std::tan(std::numbers::pi * F);
}

CalibrationResult calibrate_tail_constants(std::span<const CalibrationRow> rows,
                                           const TailParams& base) {
  if (rows.size() < 4) {
    throw std::invalid_argument("wkb: calibration needs at least four rows");
  }
  // Normal equations for y = p * cd + q * cD with p = d^2, q = D.
  double add = 0.0;
  double adD = 0.0;
  double aDD = 0.0;
  double yd = 0.0;
  double yD = 0.0;
  double max_cd = 0.0;
  for (const auto& row : rows) {
    const FParts f = f_parts(row.eps, base);
    const double y = row.nu_th_target - static_cast<double>(row.nu) - f.base;
    add += f.cd * f.cd;
    adD += f.cd * f.cD;
    aDD += f.cD * f.cD;
    yd += f.cd * y;
    yD += f.cD * y;
    max_cd = std::max(max_cd, std::abs(f.cd));
  }
  if (!(aDD > 0.0)) throw calibration_error("wkb: calibration system is rank deficient");

  // Identifiability of d: far from threshold the d^2 coefficient is
  // suppressed by (kappa beta6)^-4 and target rounding noise would be
  // amplified into an arbitrary d. Fit d only when a plausible d^2 (order
  // (2 beta6)^2) moves some target by more than the rounding scale.
  const double d2_scale = 4.0 * base.beta6 * base.beta6;
  const bool d_identifiable = max_cd * d2_scale > 3e-3;

  bool d_unidentified = false;
  double p = 0.0;  // d^2
  double q;        // D
  if (d_identifiable) {
    const double det = add * aDD - adD * adD;
    if (!(det > 1e-12 * add * aDD)) {
      throw calibration_error("wkb: calibration system is rank deficient");
    }
    p = (yd * aDD - yD * adD) / det;
    q = (yD * add - yd * adD) / det;
  } else {
    d_unidentified = true;
    q = yD / aDD;
  }

  if (p < 0.0) {
    // tolerate a slightly negative fit when its effect on every target is
    // below the print resolution; otherwise the data contradict the model
    if (std::abs(p) * max_cd <= 0.02) {
      p = 0.0;
    } else {
      throw calibration_error("wkb: calibration produced negative d^2");
    }
  }

  CalibrationResult out;
  out.params = base;
  out.params.d = std::sqrt(p);
  out.params.D = q;
  out.d_unidentified = d_unidentified;

  double ss = 0.0;
  for (const auto& row : rows) {
    const double r = threshold_quantum_number(row.nu, row.eps, out.params) - row.nu_th_target;
    ss += r * r;
  }
  out.rms_residual = std::sqrt(ss / static_cast<double>(rows.size()));
  return out;
}

}  // namespace hhbar::wkb
