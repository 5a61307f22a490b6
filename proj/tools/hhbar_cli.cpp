// Batch driver for the H-Hbar nuclear-motion library: spectra, reference
// table regeneration, scattering-length estimates, semiclassical checks.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 I/O error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hhbar/constants.hpp"
#include "hhbar/errors.hpp"
#include "hhbar/integrals.hpp"
#include "hhbar/io.hpp"
#include "hhbar/reference_data.hpp"
#include "hhbar/scattering.hpp"
#include "hhbar/spectrum.hpp"
#include "hhbar/version.hpp"
#include "hhbar/wkb.hpp"

namespace {

using namespace hhbar;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  std::string output;  // empty = stdout
  std::string format = "csv";
  std::string flavor = "bo";
  std::string potential_params;  // parameter-file override
  std::size_t n_max = 120;
  double r_min = 3e-5;
  double r_max = 20.0;
  int l = 0;
  double tau = 1e-12;
  bool no_compensated = false;
  bool serial = false;
};

potential::Flavor parse_flavor(const std::string& name) {
  if (name == "bo") return potential::Flavor::bo;
  if (name == "scaled" || name == "mass_scaled") return potential::Flavor::mass_scaled;
  throw config_error("unknown flavor '" + name + "' (expected bo or scaled)");
}

potential::PotentialModel load_model(const CommonOpts& opts, potential::Flavor flavor) {
  if (!opts.potential_params.empty()) {
    return potential::load_with_overrides(flavor, opts.potential_params);
  }
  return potential::load_builtin(flavor);
}

spectrum::SpectrumConfig make_config(const CommonOpts& opts, potential::Flavor flavor, int l) {
  spectrum::SpectrumConfig cfg;
  cfg.flavor = flavor;
  cfg.basis = {.n_max = opts.n_max, .r_min = opts.r_min, .r_max = opts.r_max, .l = l};
  cfg.policy.tau = opts.tau;
  cfg.policy.compensated = !opts.no_compensated;
  cfg.policy.exec = opts.serial ? ExecMode::serial : ExecMode::parallel;
  if (opts.tau <= 0.0 || opts.tau >= 1.0) throw config_error("tau must be in (0, 1)");
  if (opts.n_max < 2) throw config_error("nmax must be at least 2");
  if (!(opts.r_min > 0.0) || !(opts.r_max > opts.r_min)) {
    throw config_error("require 0 < rmin < rmax");
  }
  if (l < 0) throw config_error("l must be non-negative");
  return cfg;
}

// Effective-configuration echo placed at the top of every output; all header
// lines start with '#' so data rows are machine-separable.
std::string header_echo(const std::string& command, const std::vector<std::string>& kv) {
  std::ostringstream os;
  os << "# tool: hhbar " << version << '\n';
  os << "# command: " << command << '\n';
  for (const auto& item : kv) os << "# " << item << '\n';
  return os.str();
}

void deliver(const CommonOpts& opts, const std::string& payload) {
  if (opts.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw io_error("cannot open output file " + opts.output);
  out << payload;
  if (!out) throw io_error("write failed: " + opts.output);
}

std::string fmt(double v) { return io::format_full(v); }

// ---------------------------------------------------------------------------

int cmd_potential(const CommonOpts& opts, std::optional<double> r_single, double grid_lo,
                  double grid_hi, std::size_t grid_n) {
  const auto bo = load_model(opts, potential::Flavor::bo);
  const auto ms = load_model(opts, potential::Flavor::mass_scaled);
  std::ostringstream os;
  os << header_echo("potential",
                    {r_single ? "r = " + fmt(*r_single)
                              : "rgrid = " + fmt(grid_lo) + ":" + fmt(grid_hi) + ":" +
                                    std::to_string(grid_n)});
  os << "# columns: R,V_BO,V_scaled,delta_lep_mh\n";
  auto emit = [&](double R) {
    os << fmt(R) << ',' << fmt(potential::eval(bo, R)) << ',' << fmt(potential::eval(ms, R))
       << ',' << fmt(potential::delta_lep(ms, bo, R)) << '\n';
  };
  if (r_single) {
    emit(*r_single);
  } else {
    for (std::size_t i = 0; i < grid_n; ++i) {
      emit(grid_lo + (grid_hi - grid_lo) * static_cast<double>(i) /
                         static_cast<double>(grid_n - 1));
    }
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_spectrum(const CommonOpts& opts, const std::string& dump_basis,
                 const std::string& dump_matrices, const std::string& matrix_format) {
  const auto flavor = parse_flavor(opts.flavor);
  const auto cfg = make_config(opts, flavor, opts.l);
  const auto model = load_model(opts, flavor);

  if (!dump_matrices.empty()) {
    if (matrix_format != "bin" && matrix_format != "csv") {
      throw config_error("matrix-format must be bin or csv");
    }
    const auto fs = basis::build(cfg.basis);
    const auto mats =
        integrals::assemble_matrices(fs, model, cfg.constants.mu_n(), cfg.policy.exec);
    const std::pair<const char*, const Matrix*> parts[] = {
        {"S", &mats.S}, {"T", &mats.T}, {"V", &mats.V}};
    for (const auto& [name, matrix] : parts) {
      if (matrix_format == "bin") {
        io::write_matrix_binary(dump_matrices + "." + name + ".bin", *matrix);
      } else {
        std::ofstream out(dump_matrices + "." + name + ".csv");
        if (!out) throw io_error("cannot open matrix dump file");
        io::write_matrix_csv(out, *matrix);
      }
    }
  }

  const auto res = spectrum::run_with_model(cfg, model);

  if (!dump_basis.empty()) {
    std::ostringstream os;
    os << "# columns: index,kind,nu,norm\n";
    for (std::size_t i = 0; i < res.functions.size(); ++i) {
      const auto& f = res.functions[i];
      os << i << ',' << (f.kind == basis::TrigKind::cosine ? "cos" : "sin") << ','
         << fmt(f.nu) << ',' << fmt(f.norm) << '\n';
    }
    std::ofstream out(dump_basis);
    if (!out) throw io_error("cannot open " + dump_basis);
    out << os.str();
  }

  const std::vector<std::string> echo = {
      "flavor = " + opts.flavor,
      "l = " + std::to_string(opts.l),
      "n_max = " + std::to_string(opts.n_max),
      "r_min = " + fmt(opts.r_min),
      "r_max = " + fmt(opts.r_max),
      "tau = " + fmt(opts.tau),
      "retained = " + std::to_string(res.diagnostics.retained),
      "overlap_condition = " + fmt(res.diagnostics.overlap_condition),
      "max_residual = " + fmt(res.diagnostics.max_residual)};

  if (opts.format == "json") {
    auto j = io::spectrum_to_json(res);
    j["tool_version"] = version;
    deliver(opts, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << header_echo("spectrum", echo);
  os << "# columns: nu,energy,bound,dissociation\n";
  for (const auto& st : res.states) {
    os << st.nu_index << ',' << fmt(st.energy) << ',' << (st.bound ? 1 : 0) << ','
       << fmt(res.threshold - st.energy) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_table2(const CommonOpts& opts) {
  const auto cfg_bo = make_config(opts, potential::Flavor::bo, 0);
  auto cfg_ms = cfg_bo;
  cfg_ms.flavor = potential::Flavor::mass_scaled;
  const auto res_bo = spectrum::run_with_model(cfg_bo, load_model(opts, potential::Flavor::bo));
  const auto res_ms =
      spectrum::run_with_model(cfg_ms, load_model(opts, potential::Flavor::mass_scaled));

  std::ostringstream os;
  os << header_echo("table2", {"basis = " + std::to_string(opts.n_max) + " pairs, r_min " +
                                   fmt(opts.r_min) + ", r_max " + fmt(opts.r_max)});
  os << "# columns: nu,E_bo,E_bo_ref,dE_bo,E_scaled,E_scaled_ref,dE_scaled,"
        "E_pn,delta,delta_ref,eps_bo,eps_bo_ref,eps_scaled,eps_scaled_ref\n";
  for (const auto& row : reference::levels_l0()) {
    const std::size_t k = static_cast<std::size_t>(row.nu - 1);
    if (k >= res_bo.states.size() || k >= res_ms.states.size()) break;
    const double e_bo = res_bo.states[k].energy;
    const double e_ms = res_ms.states[k].energy;
    const double e_pn = potential::protonium_level(row.nu);
    os << row.nu << ',' << fmt(e_bo) << ',' << fmt(row.E_bo) << ',' << fmt(e_bo - row.E_bo)
       << ',' << fmt(e_ms) << ',' << fmt(row.E_scaled) << ',' << fmt(e_ms - row.E_scaled) << ','
       << fmt(e_pn) << ',' << fmt(e_pn - e_bo) << ',' << fmt(row.delta) << ','
       << fmt(res_bo.threshold - e_bo) << ',' << fmt(row.eps_bo) << ','
       << fmt(res_ms.threshold - e_ms) << ',' << fmt(row.eps_scaled) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_table3(const CommonOpts& opts) {
  const auto cfg_bo = make_config(opts, potential::Flavor::bo, 1);
  auto cfg_ms = cfg_bo;
  cfg_ms.flavor = potential::Flavor::mass_scaled;
  const auto res_bo = spectrum::run_with_model(cfg_bo, load_model(opts, potential::Flavor::bo));
  const auto res_ms =
      spectrum::run_with_model(cfg_ms, load_model(opts, potential::Flavor::mass_scaled));

  std::ostringstream os;
  os << header_echo("table3", {"basis = " + std::to_string(opts.n_max) + " pairs, r_min " +
                                   fmt(opts.r_min) + ", r_max " + fmt(opts.r_max)});
  os << "# columns: nu,E_bo,E_bo_ref,dE_bo,E_scaled,E_scaled_ref,dE_scaled,"
        "eps_bo,eps_bo_ref,eps_scaled,eps_scaled_ref\n";
  for (const auto& row : reference::levels_l1()) {
    const std::size_t k = static_cast<std::size_t>(row.nu - 1);
    if (k >= res_bo.states.size() || k >= res_ms.states.size()) break;
    const double e_bo = res_bo.states[k].energy;
    const double e_ms = res_ms.states[k].energy;
    os << row.nu << ',' << fmt(e_bo) << ',' << fmt(row.E_bo) << ',' << fmt(e_bo - row.E_bo)
       << ',' << fmt(e_ms) << ',' << fmt(row.E_scaled) << ',' << fmt(e_ms - row.E_scaled) << ','
       << fmt(res_bo.threshold - e_bo) << ',' << fmt(row.eps_bo) << ','
       << fmt(res_ms.threshold - e_ms) << ',' << fmt(row.eps_scaled) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

wkb::TailParams tail_for(potential::Flavor flavor, std::optional<double> d,
                         std::optional<double> D, const std::vector<int>& calib_rows) {
  if (d.has_value() != D.has_value()) {
    throw config_error("--d and --D must be given together");
  }
  const PhysicalConstants c;
  const double beta6 = flavor == potential::Flavor::bo ? reference::beta6_bo
                                                       : reference::beta6_scaled;
  wkb::TailParams base = wkb::tail_from_beta6(beta6, c.mu_n());
  if (d && D) {
    base.d = *d;
    base.D = *D;
    return base;
  }
  std::vector<wkb::CalibrationRow> rows;
  for (int nu : calib_rows) {
    const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(nu - 1)];
    const auto it = std::find_if(reference::threshold_numbers().begin(),
                                 reference::threshold_numbers().end(),
                                 [&](const auto& r) { return r.nu == nu; });
    if (it == reference::threshold_numbers().end()) {
      throw config_error("calibration row " + std::to_string(nu) +
                         " is not in the bundled threshold table (20..29)");
    }
    rows.push_back({nu, flavor == potential::Flavor::bo ? lvl.eps_bo : lvl.eps_scaled,
                    flavor == potential::Flavor::bo ? it->nu_th_bo : it->nu_th_scaled});
  }
  return wkb::calibrate_tail_constants(rows, base).params;
}

int cmd_table4(const CommonOpts& opts, std::optional<double> d, std::optional<double> D,
               const std::vector<int>& calib_rows) {
  const auto tail_bo = tail_for(potential::Flavor::bo, d, D, calib_rows);
  const auto tail_ms = tail_for(potential::Flavor::mass_scaled, d, D, calib_rows);

  std::ostringstream os;
  os << header_echo("table4",
                    {"d_bo = " + fmt(*tail_bo.d), "D_bo = " + fmt(*tail_bo.D),
                     "d_scaled = " + fmt(*tail_ms.d), "D_scaled = " + fmt(*tail_ms.D)});
  os << "# columns: nu,nu_th_bo,nu_th_bo_ref,dev_bo,nu_th_scaled,nu_th_scaled_ref,"
        "dev_scaled\n";
  for (const auto& row : reference::threshold_numbers()) {
    const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(row.nu - 1)];
    const double nth_bo = wkb::threshold_quantum_number(row.nu, lvl.eps_bo, tail_bo);
    const double nth_ms = wkb::threshold_quantum_number(row.nu, lvl.eps_scaled, tail_ms);
    os << row.nu << ',' << fmt(nth_bo) << ',' << fmt(row.nu_th_bo) << ','
       << fmt(nth_bo - row.nu_th_bo) << ',' << fmt(nth_ms) << ',' << fmt(row.nu_th_scaled)
       << ',' << fmt(nth_ms - row.nu_th_scaled) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_table5(const CommonOpts& opts, double rgrid_lo, double rgrid_hi) {
  const auto bo = load_model(opts, potential::Flavor::bo);
  const auto ms = load_model(opts, potential::Flavor::mass_scaled);
  std::ostringstream os;
  os << header_echo("table5", {"rgrid = " + fmt(rgrid_lo) + ":" + fmt(rgrid_hi)});
  os << "# columns: R,delta_lep_mh,delta_lep_ref_mh,dev_mh,e_ad_ref_mh\n";
  for (const auto& row : reference::tail_corrections()) {
    if (row.R < rgrid_lo || row.R > rgrid_hi) continue;
    const double mh = potential::delta_lep(ms, bo, row.R);
    os << fmt(row.R) << ',' << fmt(mh) << ',' << fmt(row.delta_lep_mh) << ','
       << fmt(mh - row.delta_lep_mh) << ',' << fmt(row.e_ad_mh) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_scatter(const CommonOpts& opts, double window_lo, double window_hi, bool scan) {
  const auto flavor = parse_flavor(opts.flavor);
  const auto cfg = make_config(opts, flavor, 0);
  if (!(window_lo > 0.0) || !(window_hi > window_lo)) {
    throw config_error("require 0 < window_lo < window_hi");
  }
  if (window_hi > opts.r_max) {
    throw config_error("window extends past r_max, where the basis cannot hold a line");
  }

  scattering::TangentEstimate est;
  spectrum::SpectrumResult res;
  if (scan) {
    scattering::UncertaintyScanConfig scan_cfg;
    scan_cfg.reference = cfg;
    const double half = 0.5 * (window_hi - window_lo);
    const double mid = 0.5 * (window_hi + window_lo);
    scan_cfg.windows = {{mid - half - 1.0, mid + half - 1.0},
                        {window_lo, window_hi},
                        {mid - half + 1.0, mid + half + 1.0}};
    est = scattering::uncertainty_scan(scan_cfg);
    res = spectrum::run(cfg);
  } else {
    res = spectrum::run(cfg);
    est = scattering::tangent_scattering_length(res, {window_lo, window_hi});
  }

  if (opts.format == "json") {
    auto j = io::tangent_to_json(est);
    j["tool_version"] = version;
    deliver(opts, j.dump(2) + "\n");
    return 0;
  }

  // u(R) samples of the lowest continuum state plus the fitted line
  std::ostringstream os;
  os << header_echo("scatter",
                    {"flavor = " + opts.flavor, "window = [" + fmt(est.window.lo) + ", " +
                                                    fmt(est.window.hi) + "]",
                     "a = " + fmt(est.a), "slope = " + fmt(est.slope),
                     "intercept = " + fmt(est.intercept),
                     "fit_residual = " + fmt(est.fit_residual),
                     "uncertainty = " + fmt(est.uncertainty),
                     "continuum_energy = " + fmt(est.continuum_energy)});
  os << "# columns: R,u,line\n";
  int cont_index = 0;
  for (const auto& st : res.states) {
    if (!st.bound) {
      cont_index = st.nu_index;
      break;
    }
  }
  const auto grid = spectrum::log_grid(1e-3, opts.r_max, 600);
  const auto samples = spectrum::radial_wavefunction(res, cont_index, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << fmt(grid[i]) << ',' << fmt(samples.u[i]) << ','
       << fmt(est.slope * grid[i] + est.intercept) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_wkb(const CommonOpts& opts, std::optional<double> d, std::optional<double> D,
            const std::vector<int>& calib_rows) {
  const auto tail_bo = tail_for(potential::Flavor::bo, d, D, calib_rows);
  const auto tail_ms = tail_for(potential::Flavor::mass_scaled, d, D, calib_rows);
  const double eps_bo = reference::levels_l0()[28].eps_bo;
  const double eps_ms = reference::levels_l0()[28].eps_scaled;
  const double a_bo = wkb::wkb_scattering_length(eps_bo, tail_bo);
  const double a_ms = wkb::wkb_scattering_length(eps_ms, tail_ms);

  if (opts.format == "json") {
    nlohmann::json j = {
        {"tool_version", version},
        {"bo",
         {{"beta6", tail_bo.beta6}, {"C6", tail_bo.C6}, {"b", tail_bo.b}, {"d", *tail_bo.d},
          {"D", *tail_bo.D}, {"scattering_length", a_bo}}},
        {"scaled",
         {{"beta6", tail_ms.beta6}, {"C6", tail_ms.C6}, {"b", tail_ms.b}, {"d", *tail_ms.d},
          {"D", *tail_ms.D}, {"scattering_length", a_ms}}}};
    deliver(opts, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << header_echo("wkb", {"beta6_bo = " + fmt(tail_bo.beta6),
                            "beta6_scaled = " + fmt(tail_ms.beta6),
                            "a_wkb_bo = " + fmt(a_bo), "a_wkb_scaled = " + fmt(a_ms)});
  os << "# columns: nu,nu_th_bo,nu_th_scaled\n";
  for (const auto& row : reference::threshold_numbers()) {
    const auto& lvl = reference::levels_l0()[static_cast<std::size_t>(row.nu - 1)];
    os << row.nu << ',' << fmt(wkb::threshold_quantum_number(row.nu, lvl.eps_bo, tail_bo))
       << ',' << fmt(wkb::threshold_quantum_number(row.nu, lvl.eps_scaled, tail_ms)) << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

int cmd_scan(const CommonOpts& opts, const std::vector<std::size_t>& n_max_list,
             const std::vector<double>& r_max_list, const std::vector<int>& track) {
  const auto flavor = parse_flavor(opts.flavor);
  const auto base = make_config(opts, flavor, opts.l);
  if (n_max_list.empty() || r_max_list.empty() || track.empty()) {
    throw config_error("scan needs nmax-list, rmax-list and track states");
  }
  const auto rows = spectrum::convergence_scan(base, n_max_list, r_max_list, track);
  std::ostringstream os;
  std::ostringstream cols;
  cols << "# columns: n_max,r_max";
  for (int t : track) cols << ",E_" << t;
  os << header_echo("scan", {"flavor = " + opts.flavor, "l = " + std::to_string(opts.l)});
  os << cols.str() << '\n';
  for (const auto& row : rows) {
    os << row.n_max << ',' << fmt(row.r_max);
    for (double e : row.energies) os << ',' << fmt(e);
    os << '\n';
  }
  deliver(opts, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variational bound states, scattering length and semiclassical checks "
               "for the hydrogen-antihydrogen nuclear problem"};
  app.require_subcommand(1);

  CommonOpts opts;
  // options shared by the subcommands; attached per subcommand so that
  // `hhbar <cmd> --flag` works the usual way
  auto add_common = [&](CLI::App* cmd, bool with_basis) {
    cmd->add_option("-o,--output", opts.output, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--potential-params", opts.potential_params,
                    "parameter file overriding built-in fit values");
    if (with_basis) {
      cmd->add_option("--flavor", opts.flavor, "bo or scaled");
      cmd->add_option("--nmax,--n_max", opts.n_max, "number of cos/sin pairs");
      cmd->add_option("--rmin,--r_min", opts.r_min, "smallest grid radius, bohr");
      cmd->add_option("--rmax,--r_max", opts.r_max, "largest grid radius, bohr");
      cmd->add_option("--tau", opts.tau, "overlap conditioning cutoff");
      cmd->add_flag("--no-compensated", opts.no_compensated,
                    "disable compensated accumulation in the reduction");
      cmd->add_flag("--serial", opts.serial, "run kernels serially");
    }
    cmd->set_config("--config", "", "read options from a key = value file");
  };

  // potential
  auto* p_cmd = app.add_subcommand("potential", "evaluate the fitted curves");
  std::optional<double> r_single;
  double grid_lo = 0.744, grid_hi = 20.0;
  std::size_t grid_n = 200;
  add_common(p_cmd, false);
  p_cmd->add_option("--flavor", opts.flavor, "ignored; both curves are emitted");
  p_cmd->add_option("--r", r_single, "single radius, bohr");
  p_cmd->add_option("--rgrid-lo", grid_lo, "grid start, bohr");
  p_cmd->add_option("--rgrid-hi", grid_hi, "grid end, bohr");
  p_cmd->add_option("--rgrid-n", grid_n, "grid points");

  // spectrum
  auto* s_cmd = app.add_subcommand("spectrum", "solve one (flavor, l, basis) problem");
  std::string dump_basis, dump_matrices, matrix_format = "bin";
  add_common(s_cmd, true);
  s_cmd->add_option("--l", opts.l, "angular momentum");
  s_cmd->add_option("--dump-basis", dump_basis, "write index,kind,nu,norm CSV");
  s_cmd->add_option("--dump-matrices", dump_matrices,
                    "write <prefix>.{S,T,V} dense matrices");
  s_cmd->add_option("--matrix-format", matrix_format, "bin or csv");

  auto* t2_cmd = app.add_subcommand("table2", "s-wave levels against the bundled reference");
  add_common(t2_cmd, true);
  auto* t3_cmd = app.add_subcommand("table3", "l = 1 levels against the bundled reference");
  add_common(t3_cmd, true);

  std::optional<double> tail_d, tail_D;
  std::vector<int> calib_rows{22, 25, 28, 29};
  auto* t4_cmd = app.add_subcommand("table4", "threshold quantum numbers");
  add_common(t4_cmd, false);
  t4_cmd->add_option("--d", tail_d, "tail constant d (bohr); requires --D");
  t4_cmd->add_option("--D", tail_D, "tail constant D; requires --d");
  t4_cmd->add_option("--calibrate-rows", calib_rows, "reference rows for the (d, D) fit");

  auto* t5_cmd = app.add_subcommand("table5", "mass-scaling correction against the reference");
  double t5_lo = 0.0, t5_hi = 1e30;
  add_common(t5_cmd, false);
  t5_cmd->add_option("--rgrid-lo", t5_lo, "restrict to reference rows at R >= this");
  t5_cmd->add_option("--rgrid-hi", t5_hi, "restrict to reference rows at R <= this");

  auto* sc_cmd = app.add_subcommand("scatter", "tangent-line scattering length");
  double window_lo = scattering::kDefaultWindow.lo;
  double window_hi = scattering::kDefaultWindow.hi;
  bool do_scan = false;
  add_common(sc_cmd, true);
  sc_cmd->add_option("--window-lo,--window_lo", window_lo, "fit window start, bohr");
  sc_cmd->add_option("--window-hi,--window_hi", window_hi, "fit window end, bohr");
  sc_cmd->add_flag("--scan", do_scan, "uncertainty from the r_max / n_max / window scan");

  auto* w_cmd = app.add_subcommand("wkb", "semiclassical threshold numbers and length");
  add_common(w_cmd, false);
  w_cmd->add_option("--d", tail_d, "tail constant d (bohr); requires --D");
  w_cmd->add_option("--D", tail_D, "tail constant D; requires --d");
  w_cmd->add_option("--calibrate-rows", calib_rows, "reference rows for the (d, D) fit");

  auto* scan_cmd = app.add_subcommand("scan", "eigenvalues over basis-parameter grids");
  std::vector<std::size_t> n_max_list{60, 120};
  std::vector<double> r_max_list{15.0, 20.0};
  std::vector<int> track{28, 29, 30};
  add_common(scan_cmd, true);
  scan_cmd->add_option("--l", opts.l, "angular momentum");
  scan_cmd->add_option("--nmax-list", n_max_list, "pair counts to scan");
  scan_cmd->add_option("--rmax-list", r_max_list, "r_max values to scan");
  scan_cmd->add_option("--track", track, "1-based state indices to record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*p_cmd) return cmd_potential(opts, r_single, grid_lo, grid_hi, grid_n);
    if (*s_cmd) return cmd_spectrum(opts, dump_basis, dump_matrices, matrix_format);
    if (*t2_cmd) return cmd_table2(opts);
    if (*t3_cmd) return cmd_table3(opts);
    if (*t4_cmd) return cmd_table4(opts, tail_d, tail_D, calib_rows);
    if (*t5_cmd) return cmd_table5(opts, t5_lo, t5_hi);
    if (*sc_cmd) return cmd_scatter(opts, window_lo, window_hi, do_scan);
    if (*w_cmd) return cmd_wkb(opts, tail_d, tail_D, calib_rows);
    if (*scan_cmd) return cmd_scan(opts, n_max_list, r_max_list, track);
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const io_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
