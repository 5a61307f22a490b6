#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hhbar/basis.hpp"
#include "hhbar/constants.hpp"
#include "hhbar/eigensolver.hpp"
#include "hhbar/potential.hpp"

namespace hhbar::spectrum {

struct SpectrumConfig {
  potential::Flavor flavor = potential::Flavor::bo;
  basis::BasisSpec basis;
  eigensolver::ConditioningPolicy policy;
  PhysicalConstants constants;
};

struct StateInfo {
  int nu_index = 0;  // 1-based, ascending with energy
  double energy = 0.0;
  std::vector<double> coefficients;  // sign fixed so u'(0+) > 0
  bool bound = false;
  bool near_threshold = false;  // within 1e-12 of threshold, classified continuum
};

struct SpectrumDiagnostics {
  std::size_t basis_size = 0;
  std::size_t retained = 0;
  std::size_t dropped = 0;
  double overlap_condition = 0.0;
  double max_residual = 0.0;
};

struct SpectrumResult {
  potential::Flavor flavor = potential::Flavor::bo;
  int l = 0;
  basis::BasisSpec spec;
  std::vector<basis::BasisFunction> functions;
  double threshold = 0.0;
  std::vector<StateInfo> states;
  SpectrumDiagnostics diagnostics;
};

// Full pipeline: build basis, assemble matrices, solve, classify states.
SpectrumResult run(const SpectrumConfig& config);

// Same pipeline with an explicit potential model (test potentials,
// parameter-file overrides).
SpectrumResult run_with_model(const SpectrumConfig& config,
                              const potential::PotentialModel& model);

// threshold - E for every bound state, in variational order.
std::vector<double> dissociation_energies(const SpectrumResult& result);

// protonium_level(nu) - E_nu for every bound state; l = 0 results only.
std::vector<double> protonium_comparison(const SpectrumResult& result);

struct RadialSamples {
  std::vector<double> R;
  std::vector<double> phi;  // radial wavefunction
  std::vector<double> u;    // R * phi
};

RadialSamples radial_wavefunction(const SpectrumResult& result, int nu_index,
                                  std::span<const double> R_grid);

std::vector<double> log_grid(double lo, double hi, std::size_t n);

struct ScanPoint {
  std::size_t n_max = 0;
  double r_max = 0.0;
  std::vector<double> energies;  // tracked states, same order as `track`
};

// Grid of runs over (n_max, r_max) recording the tracked 1-based state
// indices; used for convergence plateaus and uncertainty estimates.
std::vector<ScanPoint> convergence_scan(const SpectrumConfig& base,
                                        std::span<const std::size_t> n_max_values,
                                        std::span<const double> r_max_values,
                                        std::span<const int> track);

}  // namespace hhbar::spectrum
