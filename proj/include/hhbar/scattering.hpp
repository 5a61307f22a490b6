#pragma once

#include <cstddef>
#include <vector>

#include "hhbar/spectrum.hpp"

namespace hhbar::scattering {

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

// Fit interval for the asymptotic line. The inner edge sits past the van der
// Waals zone (|V - E_inf| below the continuum state's discretization energy,
// R around 11-12 bohr here); the outer edge stays below the radius where the
// Gaussian ladder stops representing a straight line.
inline constexpr Window kDefaultWindow{12.0, 16.0};

struct TangentEstimate {
  double a = 0.0;  // R-axis crossing of the fitted line, bohr
  Window window;
  double slope = 0.0;
  double intercept = 0.0;
  double fit_residual = 0.0;  // rms deviation relative to max |u| on the window
  double uncertainty = 0.0;   // half-spread over a parameter scan; 0 for one run
  bool single_point = false;  // uncertainty came from a single configuration
  double continuum_energy = 0.0;
};

// Least-squares line through u(R) = R phi(R) of the lowest discretized
// continuum state; the scattering length is the crossing -intercept/slope.
TangentEstimate tangent_scattering_length(const spectrum::SpectrumResult& result, Window window,
                                          std::size_t n_points = 64);

struct UncertaintyScanConfig {
  spectrum::SpectrumConfig reference;  // also the central-value configuration
  std::vector<double> r_max_values{18.0, 20.0, 22.0};
  std::vector<std::size_t> n_max_values{100, 120};
  std::vector<Window> windows{{11.0, 15.0}, {12.0, 16.0}, {13.0, 17.0}};
};

// Central value from the reference configuration at the middle window;
// uncertainty is the half-spread of the estimate over the full
// r_max x n_max x window grid.
TangentEstimate uncertainty_scan(const UncertaintyScanConfig& config);

}  // namespace hhbar::scattering
