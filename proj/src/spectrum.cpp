#include "hhbar/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "hhbar/errors.hpp"
#include "hhbar/integrals.hpp"

namespace hhbar::spectrum {
namespace {

// Sign convention: phi(0+)/R^l -> sum over cosine members of c_i N_i (the
// sine factors vanish at the origin), so flipping the coefficient vector when
// that sum is negative makes the first lobe of u positive.
void fix_sign(std::vector<double>& c, const std::vector<basis::BasisFunction>& fs) {
  double origin = 0.0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind == basis::TrigKind::cosine) origin += c[i] * fs[i].norm;
  }
  if (origin < 0.0) {
    for (double& ci : c) ci = -ci;
  }
}

}  // namespace

SpectrumResult run_with_model(const SpectrumConfig& config,
                              const potential::PotentialModel& model) {
  SpectrumResult out;
  out.flavor = config.flavor;
  out.l = config.basis.l;
  out.spec = config.basis;
  out.functions = basis::build(config.basis);
  out.threshold = model.E_inf;

  const auto mats = integrals::assemble_matrices(out.functions, model,
                                                 config.constants.mu_n(), config.policy.exec);
  const std::size_t n = out.functions.size();
  Matrix H(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) H(i, j) = mats.T(i, j) + mats.V(i, j);
  }

  const auto eig = eigensolver::solve(H, mats.S, config.policy);

  out.diagnostics.basis_size = n;
  out.diagnostics.retained = eig.retained_dimension;
  out.diagnostics.dropped = eig.dropped_count;
  out.diagnostics.overlap_condition = eig.overlap_condition;
  out.diagnostics.max_residual = eigensolver::residual_check(H, mats.S, eig);

  out.states.reserve(eig.retained_dimension);
  for (std::size_t k = 0; k < eig.retained_dimension; ++k) {
    StateInfo st;
    st.nu_index = static_cast<int>(k) + 1;
    st.energy = eig.eigenvalues[k];
    st.coefficients.resize(n);
    for (std::size_t i = 0; i < n; ++i) st.coefficients[i] = eig.vectors(i, k);
    fix_sign(st.coefficients, out.functions);
    st.near_threshold = st.energy < out.threshold && out.threshold - st.energy < 1e-12;
    st.bound = st.energy < out.threshold && !st.near_threshold;
    out.states.push_back(std::move(st));
  }
  return out;
}

SpectrumResult run(const SpectrumConfig& config) {
  return run_with_model(config, potential::load_builtin(config.flavor));
}

std::vector<double> dissociation_energies(const SpectrumResult& result) {
  std::vector<double> eps;
  for (const auto& st : result.states) {
    if (st.bound) eps.push_back(result.threshold - st.energy);
  }
  return eps;
}

std::vector<double> protonium_comparison(const SpectrumResult& result) {
  if (result.l != 0) {
    throw std::invalid_argument("protonium_comparison: defined for l = 0 results only");
  }
  std::vector<double> delta;
  for (const auto& st : result.states) {
    if (st.bound) delta.push_back(potential::protonium_level(st.nu_index) - st.energy);
  }
  return delta;
}

RadialSamples radial_wavefunction(const SpectrumResult& result, int nu_index,
                                  std::span<const double> R_grid) {
  if (nu_index < 1 || nu_index > static_cast<int>(result.states.size())) {
    throw std::out_of_range("radial_wavefunction: state index out of range");
  }
  const auto& st = result.states[static_cast<std::size_t>(nu_index - 1)];
  RadialSamples out;
  out.R.assign(R_grid.begin(), R_grid.end());
  out.phi.resize(out.R.size());
  out.u.resize(out.R.size());
  for (std::size_t p = 0; p < out.R.size(); ++p) {
    double phi = 0.0;
    for (std::size_t i = 0; i < result.functions.size(); ++i) {
      phi += st.coefficients[i] * basis::evaluate(result.functions[i], out.R[p]);
    }
    out.phi[p] = phi;
    out.u[p] = out.R[p] * phi;
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::domain_error("log_grid: bad parameters");
  std::vector<double> g(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
  return g;
}

std::vector<ScanPoint> convergence_scan(const SpectrumConfig& base,
                                        std::span<const std::size_t> n_max_values,
                                        std::span<const double> r_max_values,
                                        std::span<const int> track) {
  std::vector<ScanPoint> rows;
  for (std::size_t nm : n_max_values) {
    for (double rm : r_max_values) {
      SpectrumConfig cfg = base;
      cfg.basis.n_max = nm;
      cfg.basis.r_max = rm;
      const SpectrumResult res = run(cfg);
      ScanPoint pt;
      pt.n_max = nm;
      pt.r_max = rm;
      for (int idx : track) {
        if (idx < 1 || idx > static_cast<int>(res.states.size())) {
          throw numerical_error("convergence_scan: tracked state missing from run");
        }
        pt.energies.push_back(res.states[static_cast<std::size_t>(idx - 1)].energy);
      }
      rows.push_back(std::move(pt));
    }
  }
  return rows;
}

}  // namespace hhbar::spectrum
