#include "hhbar/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hhbar/errors.hpp"

namespace hhbar::scattering {
namespace {

const spectrum::StateInfo& lowest_continuum(const spectrum::SpectrumResult& result) {
  for (const auto& st : result.states) {
    if (!st.bound) return st;
  }
  throw std::invalid_argument("scattering: result has no continuum state");
}

}  // namespace

TangentEstimate tangent_scattering_length(const spectrum::SpectrumResult& result, Window window,
                                          std::size_t n_points) {
  if (result.l != 0) throw std::invalid_argument("scattering: s-wave (l = 0) results only");
  if (!(window.lo > 0.0) || !(window.hi > window.lo)) {
    throw std::domain_error("scattering: bad window");
  }
  if (window.hi > result.spec.r_max) {
    throw std::domain_error("scattering: window extends past the basis validity radius");
  }
  if (n_points < 2) throw std::domain_error("scattering: need at least two sample points");

  const auto& state = lowest_continuum(result);

  std::vector<double> grid(n_points);
  const double step = (window.hi - window.lo) / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) grid[i] = window.lo + step * static_cast<double>(i);
  const auto samples = spectrum::radial_wavefunction(result, state.nu_index, grid);

  // least squares u = slope R + intercept, centered for stability
  double mean_r = 0.0;
  double mean_u = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    mean_r += grid[i];
    mean_u += samples.u[i];
  }
  mean_r /= static_cast<double>(n_points);
  mean_u /= static_cast<double>(n_points);
  double srr = 0.0;
  double sru = 0.0;
  double u_max = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double dr = grid[i] - mean_r;
    srr += dr * dr;
    sru += dr * (samples.u[i] - mean_u);
    u_max = std::max(u_max, std::abs(samples.u[i]));
  }
  const double slope = sru / srr;
  const double intercept = mean_u - slope * mean_r;
  if (std::abs(slope) * (window.hi - window.lo) < 1e-12 * (u_max + 1e-300)) {
    throw numerical_error("scattering: window is ill-posed (flat u)");
  }

  double ss = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double d = samples.u[i] - (slope * grid[i] + intercept);
    ss += d * d;
  }

  TangentEstimate est;
  est.a = -intercept / slope;
  est.window = window;
  est.slope = slope;
  est.intercept = intercept;
  est.fit_residual = std::sqrt(ss / static_cast<double>(n_points)) / u_max;
  est.single_point = true;
  est.continuum_energy = state.energy;
  return est;
}

TangentEstimate uncertainty_scan(const UncertaintyScanConfig& config) {
  if (config.r_max_values.empty() || config.n_max_values.empty() || config.windows.empty()) {
    throw std::invalid_argument("uncertainty_scan: empty scan dimension");
  }
  const Window central_window = config.windows[config.windows.size() / 2];

  const spectrum::SpectrumResult reference = spectrum::run(config.reference);
  TangentEstimate central = tangent_scattering_length(reference, central_window);

  double lo = central.a;
  double hi = central.a;
  std::size_t n_runs = 0;
  for (std::size_t nm : config.n_max_values) {
    for (double rm : config.r_max_values) {
      spectrum::SpectrumConfig cfg = config.reference;
      cfg.basis.n_max = nm;
      cfg.basis.r_max = rm;
      const bool is_reference =
          nm == config.reference.basis.n_max && rm == config.reference.basis.r_max;
      const spectrum::SpectrumResult res = is_reference ? reference : spectrum::run(cfg);
      for (const Window& w : config.windows) {
        const TangentEstimate e = tangent_scattering_length(res, w);
        lo = std::min(lo, e.a);
        hi = std::max(hi, e.a);
        ++n_runs;
      }
    }
  }
  central.uncertainty = 0.5 * (hi - lo);
  central.single_point = n_runs <= 1;
  return central;
}

}  // namespace hhbar::scattering
