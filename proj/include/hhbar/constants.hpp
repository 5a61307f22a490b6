#pragma once

namespace hhbar {

// Atomic units throughout: energies in hartree, lengths in bohr, masses in
// electron masses.
struct PhysicalConstants {
  double m_p = 1836.15267247;  // proton mass
  double E1_Ps = -0.25;        // positronium ground-state energy
  double R_c = 0.7427;         // critical internuclear distance
  double E_BO_inf = -1.0;      // Born-Oppenheimer dissociation threshold

  // Electron-proton reduced mass; dissociation threshold of the mass-scaled
  // potential is -mu().
  double mu() const { return m_p / (m_p + 1.0); }

  // Nuclear (proton-antiproton) reduced mass.
  double mu_n() const { return m_p / 2.0; }

  double E_lep_inf() const { return -mu(); }
};

}  // namespace hhbar
