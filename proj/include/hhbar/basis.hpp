#pragma once

#include <numbers>
#include <vector>

namespace hhbar::basis {

enum class TrigKind { cosine, sine };

// Oscillating-Gaussian radial basis on a geometric exponent ladder:
//
//   g_n^c(R) = N R^l exp(-nu_n R^2) cos(alpha_osc nu_n R^2)
//   g_n^s(R) = N R^l exp(-nu_n R^2) sin(alpha_osc nu_n R^2)
//
// with nu_n = 1/r_n^2, r_n = r_min (r_max/r_min)^((n-1)/(n_max-1)).
struct BasisSpec {
  std::size_t n_max = 2;  // number of cos/sin pairs; basis size is 2 n_max
  double r_min = 1.0;
  double r_max = 2.0;
  int l = 0;
  double alpha_osc = std::numbers::pi / 2.0;
};

struct BasisFunction {
  TrigKind kind = TrigKind::cosine;
  double nu = 1.0;         // Gaussian exponent, bohr^-2
  int l = 0;
  double alpha_osc = 0.0;  // oscillation ratio
  double norm = 1.0;       // unit self-overlap under the R^2 dR measure
};

// Normalization constant giving <g|g> = 1 with measure R^2 dR.
double normalization(TrigKind kind, double nu, int l, double alpha_osc);

// The 2 n_max functions ordered (cos_1, sin_1, cos_2, sin_2, ...).
std::vector<BasisFunction> build(const BasisSpec& spec);

double evaluate(const BasisFunction& f, double R);

}  // namespace hhbar::basis
