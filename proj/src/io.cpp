#include "hhbar/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "hhbar/errors.hpp"

namespace hhbar::io {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix_binary(const std::string& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  const std::uint64_t dims[2] = {m.rows(), m.cols()};
  out.write(reinterpret_cast<const char*>(dims), sizeof dims);
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(m.rows() * m.cols() * sizeof(double)));
  if (!out) throw io_error("write failed: " + path);
}

Matrix read_matrix_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::uint64_t dims[2];
  in.read(reinterpret_cast<char*>(dims), sizeof dims);
  Matrix m(dims[0], dims[1]);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(dims[0] * dims[1] * sizeof(double)));
  if (!in) throw io_error("truncated matrix file: " + path);
  return m;
}

void write_matrix_csv(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_full(m(i, j));
    }
    os << '\n';
  }
}

nlohmann::json spectrum_to_json(const spectrum::SpectrumResult& result) {
  nlohmann::json j;
  j["flavor"] = result.flavor == potential::Flavor::bo ? "bo" : "mass_scaled";
  j["l"] = result.l;
  j["threshold"] = result.threshold;
  j["basis"] = {{"n_max", result.spec.n_max},
                {"r_min", result.spec.r_min},
                {"r_max", result.spec.r_max},
                {"l", result.spec.l},
                {"alpha_osc", result.spec.alpha_osc}};
  nlohmann::json funcs = nlohmann::json::array();
  for (std::size_t i = 0; i < result.functions.size(); ++i) {
    const auto& f = result.functions[i];
    funcs.push_back({{"index", i},
                     {"kind", f.kind == basis::TrigKind::cosine ? "cos" : "sin"},
                     {"nu", f.nu},
                     {"norm", f.norm}});
  }
  j["functions"] = std::move(funcs);
  j["diagnostics"] = {{"basis_size", result.diagnostics.basis_size},
                      {"retained", result.diagnostics.retained},
                      {"dropped", result.diagnostics.dropped},
                      {"overlap_condition", result.diagnostics.overlap_condition},
                      {"max_residual", result.diagnostics.max_residual}};
  nlohmann::json states = nlohmann::json::array();
  for (const auto& st : result.states) {
    states.push_back({{"nu", st.nu_index},
                      {"energy", st.energy},
                      {"bound", st.bound},
                      {"near_threshold", st.near_threshold},
                      {"coefficients", st.coefficients}});
  }
  j["states"] = std::move(states);
  return j;
}

nlohmann::json tangent_to_json(const scattering::TangentEstimate& estimate) {
  return {{"a", estimate.a},
          {"window", {estimate.window.lo, estimate.window.hi}},
          {"slope", estimate.slope},
          {"intercept", estimate.intercept},
          {"fit_residual", estimate.fit_residual},
          {"uncertainty", estimate.uncertainty},
          {"single_point", estimate.single_point},
          {"continuum_energy", estimate.continuum_energy}};
}

}  // namespace hhbar::io
