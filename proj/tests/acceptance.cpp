// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failed criteria. Reference basis throughout: 120 cos/sin pairs
// (240 functions), r_min = 3e-5, r_max = 20.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hhbar/basis.hpp"
#include "hhbar/constants.hpp"
#include "hhbar/eigensolver.hpp"
#include "hhbar/integrals.hpp"
#include "hhbar/potential.hpp"
#include "hhbar/reference_data.hpp"
#include "hhbar/scattering.hpp"
#include "hhbar/spectrum.hpp"
#include "hhbar/wkb.hpp"
#include "oracles.hpp"

namespace {
double tangent_center = 0.0;       // criterion 5 result, reused by criterion 6
double tangent_uncertainty = 0.0;
}  // namespace

using namespace hhbar;
using potential::Flavor;

namespace {

struct Gate {
  int failed_criteria = 0;
  bool current_ok = true;

  void begin() { current_ok = true; }
  void check(bool ok, const char* what, double got, double want, double tol) {
    if (!ok) {
      std::printf("    fail: %s  got %.8g  expected %.8g  (tol %.3g)\n", what, got, want, tol);
      current_ok = false;
    }
  }
  void note(const char* text) { std::printf("    note: %s\n", text); }
  void end(int idx, const char* title) {
    std::printf("criterion %d [%s]: %s\n", idx, title, current_ok ? "PASS" : "FAIL");
    if (!current_ok) ++failed_criteria;
    std::fflush(stdout);
  }
};

spectrum::SpectrumConfig reference_config(Flavor flavor, int l) {
  spectrum::SpectrumConfig cfg;
  cfg.flavor = flavor;
  cfg.basis = {.n_max = 120, .r_min = 3e-5, .r_max = 20.0, .l = l};
  return cfg;
}

double energy(const spectrum::SpectrumResult& res, int nu) {
  return res.states[static_cast<std::size_t>(nu - 1)].energy;
}

int count_bound(const spectrum::SpectrumResult& res) {
  int n = 0;
  for (const auto& st : res.states) n += st.bound ? 1 : 0;
  return n;
}

int count_nodes(const std::vector<double>& u) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  const double floor = 1e-4 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : u) {
    if (std::abs(v) < floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

wkb::TailParams calibrated_tail(Flavor flavor, const std::vector<int>& fit_rows) {
  const PhysicalConstants c;
  const double beta6 =
      flavor == Flavor::bo ? reference::beta6_bo : reference::beta6_scaled;
  std::vector<wkb::CalibrationRow> rows;
  for (int nu : fit_rows) {
    const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(nu - 1)];
    const auto it = std::find_if(reference::threshold_numbers().begin(),
                                 reference::threshold_numbers().end(),
                                 [&](const auto& r) { return r.nu == nu; });
    rows.push_back({nu, flavor == Flavor::bo ? lvl.eps_bo : lvl.eps_scaled,
                    flavor == Flavor::bo ? it->nu_th_bo : it->nu_th_scaled});
  }
  return wkb::calibrate_tail_constants(rows, wkb::tail_from_beta6(beta6, c.mu_n())).params;
}

}  // namespace

int main() {
  const auto wall_start = std::chrono::steady_clock::now();
  Gate gate;
  const PhysicalConstants constants;

  // shared production runs
  const auto res_bo0 = spectrum::run(reference_config(Flavor::bo, 0));
  const auto res_ms0 = spectrum::run(reference_config(Flavor::mass_scaled, 0));
  const auto res_bo1 = spectrum::run(reference_config(Flavor::bo, 1));
  const auto res_ms1 = spectrum::run(reference_config(Flavor::mass_scaled, 1));

  // 1: s-wave levels, plain potential -----------------------------------
  gate.begin();
  for (const auto& row : reference::levels_l0()) {
    if (row.nu > 20) continue;
    const double e = energy(res_bo0, row.nu);
    gate.check(std::abs(e - row.E_bo) <= 1e-4, "E(nu<=20) vs reference", e, row.E_bo, 1e-4);
  }
  for (int nu : {27, 28, 29}) {
    const double eps = res_bo0.threshold - energy(res_bo0, nu);
    const double ref = reference::levels_l0()[nu - 1].eps_bo;
    gate.check(std::abs(eps - ref) <= 0.02 * ref, "eps(27..29) 2% relative", eps, ref,
               0.02 * ref);
  }
  gate.end(1, "s-wave levels, plain potential");

  // 2: s-wave levels, mass-scaled potential -----------------------------
  gate.begin();
  for (const auto& row : reference::levels_l0()) {
    if (row.nu > 20) continue;
    const double e = energy(res_ms0, row.nu);
    gate.check(std::abs(e - row.E_scaled) <= 1e-4, "E(nu<=20) vs reference", e, row.E_scaled,
               1e-4);
  }
  for (int nu : {27, 28, 29}) {
    const double eps = res_ms0.threshold - energy(res_ms0, nu);
    const double ref = reference::levels_l0()[nu - 1].eps_scaled;
    gate.check(std::abs(eps - ref) <= 0.02 * ref, "eps(27..29) 2% relative", eps, ref,
               0.02 * ref);
  }
  {
    const auto delta = spectrum::protonium_comparison(res_ms0);
    for (int nu = 1; nu <= 19; ++nu) {
      gate.check(std::abs(delta[nu - 1] - 0.250) <= 0.001, "delta(nu<=19) = 0.250",
                 delta[nu - 1], 0.250, 0.001);
    }
  }
  gate.end(2, "s-wave levels, mass-scaled potential");

  // 3: l = 1 levels, both potentials ------------------------------------
  gate.begin();
  for (const auto& row : reference::levels_l1()) {
    if (row.nu > 19) continue;
    const double e_bo = energy(res_bo1, row.nu);
    const double e_ms = energy(res_ms1, row.nu);
    gate.check(std::abs(e_bo - row.E_bo) <= 1e-4, "E_bo(nu<=19)", e_bo, row.E_bo, 1e-4);
    gate.check(std::abs(e_ms - row.E_scaled) <= 1e-4, "E_scaled(nu<=19)", e_ms, row.E_scaled,
               1e-4);
  }
  for (int nu : {26, 27, 28}) {  // last three bound states
    const double eps_bo = res_bo1.threshold - energy(res_bo1, nu);
    const double eps_ms = res_ms1.threshold - energy(res_ms1, nu);
    const double ref_bo = reference::levels_l1()[nu - 1].eps_bo;
    const double ref_ms = reference::levels_l1()[nu - 1].eps_scaled;
    gate.check(std::abs(eps_bo - ref_bo) <= 0.03 * ref_bo, "eps_bo last three", eps_bo, ref_bo,
               0.03 * ref_bo);
    gate.check(std::abs(eps_ms - ref_ms) <= 0.03 * ref_ms, "eps_scaled last three", eps_ms,
               ref_ms, 0.03 * ref_ms);
  }
  gate.end(3, "l = 1 levels, both potentials");

  // 4: bound-state counts ------------------------------------------------
  gate.begin();
  gate.check(count_bound(res_bo0) == 29, "bound count bo l=0", count_bound(res_bo0), 29, 0);
  gate.check(count_bound(res_ms0) == 29, "bound count scaled l=0", count_bound(res_ms0), 29, 0);
  gate.check(count_bound(res_bo1) == 28, "bound count bo l=1", count_bound(res_bo1), 28, 0);
  gate.check(count_bound(res_ms1) == 28, "bound count scaled l=1", count_bound(res_ms1), 28, 0);
  gate.end(4, "bound-state counts 29 / 28");

  // 5: tangent scattering length ----------------------------------------
  gate.begin();
  {
    const std::vector<double> r_max_values{18.0, 20.0, 22.0};
    const std::vector<std::size_t> n_max_values{100, 120};
    const std::vector<scattering::Window> windows{{11, 15}, {12, 16}, {13, 17}};

    double center = 0.0;
    double basis_lo = 1e9, basis_hi = -1e9;  // spread over r_max x n_max, default window
    double full_lo = 1e9, full_hi = -1e9;    // spread including window variation
    for (std::size_t nm : n_max_values) {
      for (double rm : r_max_values) {
        auto cfg = reference_config(Flavor::bo, 0);
        cfg.basis.n_max = nm;
        cfg.basis.r_max = rm;
        const bool is_ref = nm == 120 && rm == 20.0;
        const auto res = is_ref ? res_bo0 : spectrum::run(cfg);
        for (const auto& w : windows) {
          const auto est = scattering::tangent_scattering_length(res, w);
          full_lo = std::min(full_lo, est.a);
          full_hi = std::max(full_hi, est.a);
          const bool default_window = w.lo == scattering::kDefaultWindow.lo;
          if (default_window) {
            basis_lo = std::min(basis_lo, est.a);
            basis_hi = std::max(basis_hi, est.a);
            if (is_ref) center = est.a;
          }
        }
      }
    }
    const double basis_spread = 0.5 * (basis_hi - basis_lo);
    const double uncertainty = 0.5 * (full_hi - full_lo);
    tangent_center = center;
    tangent_uncertainty = uncertainty;
    std::printf("    a = %.3f bohr, basis-scan spread %.3f, full uncertainty %.3f\n", center,
                basis_spread, uncertainty);
    gate.check(std::abs(center - reference::tangent_scattering_length_bohr) <=
                   reference::tangent_scattering_length_err,
               "a within 7.6 +- 0.4", center, reference::tangent_scattering_length_bohr,
               reference::tangent_scattering_length_err);
    gate.check(basis_spread <= 0.4, "r_max/n_max scan spread", basis_spread, 0.0, 0.4);
    gate.check(std::abs(center - reference::integration_scattering_length_bohr) <=
                   uncertainty + reference::tangent_scattering_length_err,
               "consistent with the 7.7 integration value", center,
               reference::integration_scattering_length_bohr,
               uncertainty + reference::tangent_scattering_length_err);

    // independent oracle: direct radial integration of the same fitted
    // curve at its threshold energy gives this potential's exact scattering
    // length; the tangent construction must agree within its uncertainty
    const auto bo = potential::load_builtin(Flavor::bo);
    const double a_true = oracles::numerov_scattering_length(
        [&](double R) { return potential::eval(bo, R); }, constants.mu_n(), -1.0);
    std::printf("    integration oracle for the fitted curve: a = %.3f bohr\n", a_true);
    gate.check(std::abs(center - a_true) <= uncertainty,
               "tangent agrees with direct integration", center, a_true, uncertainty);
  }
  gate.end(5, "tangent scattering length");

  // 6: semiclassical cross-check ----------------------------------------
  gate.begin();
  {
    const std::vector<int> fit_rows{22, 25, 28, 29};
    const auto tail_bo = calibrated_tail(Flavor::bo, fit_rows);
    const auto tail_ms = calibrated_tail(Flavor::mass_scaled, fit_rows);

    for (const auto& row : reference::threshold_numbers()) {
      if (std::find(fit_rows.begin(), fit_rows.end(), row.nu) != fit_rows.end()) continue;
      const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(row.nu - 1)];
      const double nth_bo = wkb::threshold_quantum_number(row.nu, lvl.eps_bo, tail_bo);
      const double nth_ms = wkb::threshold_quantum_number(row.nu, lvl.eps_scaled, tail_ms);
      gate.check(std::abs(nth_bo - row.nu_th_bo) <= 0.02, "held-out nu_th (plain)", nth_bo,
                 row.nu_th_bo, 0.02);
      gate.check(std::abs(nth_ms - row.nu_th_scaled) <= 0.02, "held-out nu_th (scaled)",
                 nth_ms, row.nu_th_scaled, 0.02);
    }

    for (const auto& row : reference::threshold_numbers()) {
      if (row.nu < 23) continue;
      const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(row.nu - 1)];
      const double nth_bo = wkb::threshold_quantum_number(row.nu, lvl.eps_bo, tail_bo);
      const double nth_ms = wkb::threshold_quantum_number(row.nu, lvl.eps_scaled, tail_ms);
      gate.check(std::floor(nth_bo) == 29.0, "floor(nu_th) = 29, plain", std::floor(nth_bo),
                 29.0, 0.0);
      gate.check(std::floor(nth_ms) == 29.0, "floor(nu_th) = 29, scaled", std::floor(nth_ms),
                 29.0, 0.0);
      if (row.nu == 28 && (std::floor(nth_bo) != 29.0 || std::floor(nth_ms) != 29.0)) {
        gate.note("the bundled reference table itself has nu_th(28) = 28.94, below 29; a "
                  "calibration reproducing the table cannot clear this row");
      }
    }

    const double a_bo =
        wkb::wkb_scattering_length(reference::levels_l0()[28].eps_bo, tail_bo);
    const double a_ms =
        wkb::wkb_scattering_length(reference::levels_l0()[28].eps_scaled, tail_ms);
    std::printf("    a_wkb: plain %.3f bohr, scaled %.3f bohr\n", a_bo, a_ms);
    gate.check(std::abs(a_bo - reference::wkb_scattering_length_bo) <= 0.1,
               "wkb length, plain, 7.6 +- 0.1", a_bo, reference::wkb_scattering_length_bo,
               0.1);
    if (std::abs(a_bo - reference::wkb_scattering_length_bo) > 0.1) {
      gate.note("the reference table pins nu_th(29) = 29.34, i.e. F = 0.340, which maps to "
                "a = 7.74; the rounded published 7.6 corresponds to F = 0.347 and no tail "
                "constants reproduce both numbers at once");
    }
    gate.check(std::abs(a_ms - reference::wkb_scattering_length_scaled) <= 0.1,
               "wkb length, scaled, 7.5 +- 0.1", a_ms,
               reference::wkb_scattering_length_scaled, 0.1);

    // the two routes to the scattering length stay within combined bounds
    gate.check(std::abs(tangent_center - a_bo) <= tangent_uncertainty + 0.1,
               "tangent and semiclassical lengths consistent", tangent_center, a_bo,
               tangent_uncertainty + 0.1);
  }
  gate.end(6, "semiclassical threshold numbers and length");

  // 7: mass-scaling correction tail --------------------------------------
  gate.begin();
  {
    const auto bo = potential::load_builtin(Flavor::bo);
    const auto ms = potential::load_builtin(Flavor::mass_scaled);
    for (const auto& row : reference::tail_corrections()) {
      if (row.R != 10.0 && row.R != 12.0 && row.R != 15.0 && row.R != 20.0) continue;
      const double mh = potential::delta_lep(ms, bo, row.R);
      gate.check(std::abs(mh - row.delta_lep_mh) <= 0.002, "delta_lep tail row", mh,
                 row.delta_lep_mh, 0.002);
    }
    const double limit = 1000.0 / (constants.m_p + 1.0);
    const double mh100 = potential::delta_lep(ms, bo, 100.0);
    gate.check(std::abs(mh100 - limit) <= 1e-4, "delta_lep(100) vs 1/(m_p+1)", mh100, limit,
               1e-4);
  }
  gate.end(7, "mass-scaling correction tail");

  // 8: integral oracle suite and residual --------------------------------
  gate.begin();
  {
    const auto bo = potential::load_builtin(Flavor::bo);
    const auto ms = potential::load_builtin(Flavor::mass_scaled);
    std::mt19937 rng(734577);
    for (int l : {0, 1}) {
      const auto fs = basis::build({.n_max = 40, .r_min = 3e-5, .r_max = 20.0, .l = l});
      std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
      for (int trial = 0; trial < 25; ++trial) {
        const auto& fi = fs[pick(rng)];
        const auto& fj = fs[pick(rng)];
        const auto& model = (trial % 2 == 0) ? bo : ms;
        oracles::BasisPointwise pi{fi};
        oracles::BasisPointwise pj{fj};
        const double r_cut = std::sqrt(60.0 / (fi.nu + fj.nu));

        const double s = integrals::overlap_element(fi, fj);
        const double s_q = oracles::integrate(
            [&](long double R) { return pi.value(R) * pj.value(R) * R * R; }, 0.0, r_cut,
            1e-16);
        gate.check(std::abs(s - s_q) <= 1e-10 * (std::abs(s) + 1.0), "overlap vs quadrature",
                   s, s_q, 1e-10);

        const double t = integrals::kinetic_element(fi, fj, constants.mu_n());
        const double t_q =
            oracles::integrate(
                [&](long double R) {
                  long double v = pi.deriv1(R) * pj.deriv1(R) * R * R;
                  if (l > 0) v += l * (l + 1.0L) * pi.value(R) * pj.value(R);
                  return v;
                },
                0.0, r_cut, 1e-16) /
            (2.0 * constants.mu_n());
        gate.check(std::abs(t - t_q) <= 1e-10 * (std::abs(t) + 1.0), "kinetic vs quadrature",
                   t, t_q, 1e-10);

        const double v = integrals::potential_element(fi, fj, model);
        const double v_q = oracles::integrate(
            [&](long double R) {
              return pi.value(R) * pj.value(R) *
                     potential::eval(model, static_cast<double>(R)) * R * R;
            },
            0.0, r_cut, 1e-13);
        gate.check(std::abs(v - v_q) <= 1e-8 * (std::abs(v) + 1.0), "potential vs quadrature",
                   v, v_q, 1e-8);
      }
    }

    // production problem: exact symmetry and eigenpair residual
    const auto fs = basis::build(reference_config(Flavor::bo, 0).basis);
    const auto mats = integrals::assemble_matrices(fs, bo, constants.mu_n());
    bool symmetric = true;
    const std::size_t n = fs.size();
    Matrix H(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        symmetric = symmetric && mats.S(i, j) == mats.S(j, i) &&
                    mats.T(i, j) == mats.T(j, i) && mats.V(i, j) == mats.V(j, i);
        H(i, j) = mats.T(i, j) + mats.V(i, j);
      }
    }
    gate.check(symmetric, "assembled matrices exactly symmetric", symmetric ? 1 : 0, 1, 0);

    eigensolver::ConditioningPolicy policy;
    const auto eig = eigensolver::solve(H, mats.S, policy);
    const double residual = eigensolver::residual_check(H, mats.S, eig);
    std::printf("    production residual %.3g, overlap condition %.3g\n", residual,
                eig.overlap_condition);
    gate.check(residual < 1e-7, "production residual", residual, 0.0, 1e-7);

    // conditioning stability: the dissociation energy of the last state
    // below threshold moves by under 2% across tau in [1e-13, 1e-11]. At
    // tau = 1e-13 the retained subspace reaches the overlap's double-
    // precision noise floor and an extra discretized state can appear well
    // below the physical nu = 29 level, so the probe is the near-threshold
    // state itself, not a fixed index.
    const double eps_ref = res_bo0.threshold - energy(res_bo0, 29);
    for (double tau : {1e-13, 1e-11}) {
      eigensolver::ConditioningPolicy p2;
      p2.tau = tau;
      const auto eig2 = eigensolver::solve(H, mats.S, p2);
      double last_bound = 0.0;
      for (double e : eig2.eigenvalues) {
        if (e < -1.0) last_bound = e;
      }
      const double eps29 = -1.0 - last_bound;
      gate.check(std::abs(eps29 - eps_ref) <= 0.02 * eps_ref, "eps_29 stable under tau",
                 eps29, eps_ref, 0.02 * eps_ref);
    }
  }
  gate.end(8, "integral oracle suite and conditioning");

  // 9: structural properties ---------------------------------------------
  gate.begin();
  {
    // node counts nu - 1 for every bound state; nodes live inside the
    // outer classical turning point (under 8 bohr even for nu = 29), so the
    // grid stops at 12 bohr, before the basis tail's sub-1e-4 wiggle
    const auto grid = spectrum::log_grid(3.2e-5, 12.0, 24000);
    for (int nu = 1; nu <= 29; ++nu) {
      const auto w = spectrum::radial_wavefunction(res_bo0, nu, grid);
      const int nodes = count_nodes(w.u);
      gate.check(nodes == nu - 1, "node count nu - 1", nodes, nu - 1, 0);
    }

    // variational monotonicity under basis growth, lowest 20 states
    auto cfg60 = reference_config(Flavor::bo, 0);
    cfg60.basis.n_max = 60;
    const auto res60 = spectrum::run(cfg60);
    for (int nu = 1; nu <= 20; ++nu) {
      gate.check(energy(res_bo0, nu) <= energy(res60, nu) + 1e-9,
                 "E(120 pairs) <= E(60 pairs)", energy(res_bo0, nu), energy(res60, nu), 1e-9);
    }

    // centrifugal ordering: the k-th l = 1 level sits above the k-th l = 0
    for (int nu = 1; nu <= 28; ++nu) {
      gate.check(energy(res_bo1, nu) >= energy(res_bo0, nu), "E(l=1) >= E(l=0)",
                 energy(res_bo1, nu), energy(res_bo0, nu), 0.0);
    }

    // radial node structure holds on the l = 1 ladder too
    for (int nu : {1, 10, 28}) {
      const auto w = spectrum::radial_wavefunction(res_bo1, nu, grid);
      gate.check(count_nodes(w.u) == nu - 1, "node count nu - 1 (l = 1)", count_nodes(w.u),
                 nu - 1, 0);
    }

    // the last scaled-flavor level sits on a plateau in r_max
    {
      auto base = reference_config(Flavor::mass_scaled, 0);
      const std::size_t n_list[] = {120};
      const double r_list[] = {15.0, 20.0, 22.0};
      const int track[] = {29};
      const auto scan = spectrum::convergence_scan(base, n_list, r_list, track);
      double lo = scan[0].energies[0];
      double hi = lo;
      for (const auto& pt : scan) {
        lo = std::min(lo, pt.energies[0]);
        hi = std::max(hi, pt.energies[0]);
      }
      gate.check(hi - lo < 1e-6, "E_29 plateau over r_max 15..22", hi - lo, 0.0, 1e-6);
    }
  }
  gate.end(9, "structural properties");

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  std::printf("acceptance: %d of 9 criteria passed in %.1f s\n", 9 - gate.failed_criteria,
              wall);
  return gate.failed_criteria;
}
