#pragma once

#include <span>

namespace hhbar::reference {

// Published reference values for the proton-antiproton motion in the
// hydrogen-antihydrogen system, bundled for comparison output and tests.

// s-wave levels: energy with the plain and the mass-scaled potential, the
// protonium level, their difference, and the two dissociation energies.
// Row 30 lies above threshold (first discretized continuum state).
struct LevelRowL0 {
  int nu;
  double E_bo, E_scaled, E_pn, delta, eps_bo, eps_scaled;
};

// l = 1 levels and dissociation energies. Row 29 lies above threshold.
struct LevelRowL1 {
  int nu;
  double E_bo, E_scaled, eps_bo, eps_scaled;
};

// Threshold quantum numbers computed from successive dissociation energies.
struct ThresholdRow {
  int nu;
  double nu_th_bo, nu_th_scaled;
};

// Mass-scaling correction delta_E_lep(R) against the adiabatic correction
// E_ad(R) of the reference calculation, both in millihartree.
struct TailCorrectionRow {
  double R;
  double delta_lep_mh, e_ad_mh;
};

std::span<const LevelRowL0> levels_l0();
std::span<const LevelRowL1> levels_l1();
std::span<const ThresholdRow> threshold_numbers();
std::span<const TailCorrectionRow> tail_corrections();

inline constexpr double beta6_bo = 10.4521;
inline constexpr double beta6_scaled = 10.4592;

inline constexpr int bound_count_l0 = 29;
inline constexpr int bound_count_l1 = 28;

inline constexpr double tangent_scattering_length_bohr = 7.6;
inline constexpr double tangent_scattering_length_err = 0.4;
inline constexpr double integration_scattering_length_bohr = 7.7;
inline constexpr double wkb_scattering_length_bo = 7.6;
inline constexpr double wkb_scattering_length_scaled = 7.5;

}  // namespace hhbar::reference
