// Benchmark of the OpenMP kernels against their serial reference: matrix
// assembly and the eigensolver reduction, on the production-sized problem.
// Also asserts that both execution modes produce bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "hhbar/basis.hpp"
#include "hhbar/constants.hpp"
#include "hhbar/eigensolver.hpp"
#include "hhbar/integrals.hpp"
#include "hhbar/potential.hpp"

using namespace hhbar;

namespace {

template <typename F>
double time_s(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n_max = 120;
  if (argc > 1) n_max = static_cast<std::size_t>(std::atoi(argv[1]));
  const PhysicalConstants c;
  const auto model = potential::load_builtin(potential::Flavor::bo);
  const auto fs = basis::build({.n_max = n_max, .r_min = 3e-5, .r_max = 20.0, .l = 0});
  std::printf("basis: %zu functions\n", fs.size());

  integrals::RadialMatrices serial_mats, parallel_mats;
  const double t_asm_serial = time_s([&] {
    serial_mats = integrals::assemble_matrices(fs, model, c.mu_n(), ExecMode::serial);
  });
  const double t_asm_parallel = time_s([&] {
    parallel_mats = integrals::assemble_matrices(fs, model, c.mu_n(), ExecMode::parallel);
  });
  const bool asm_equal = serial_mats.S == parallel_mats.S &&
                         serial_mats.T == parallel_mats.T &&
                         serial_mats.V == parallel_mats.V;
  std::printf("assemble   serial %7.3f s   parallel %7.3f s   speedup %.2fx   bitwise %s\n",
              t_asm_serial, t_asm_parallel, t_asm_serial / t_asm_parallel,
              asm_equal ? "equal" : "DIFFER");

  const std::size_t n = fs.size();
  Matrix H(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) H(i, j) = serial_mats.T(i, j) + serial_mats.V(i, j);
  }

  eigensolver::ConditioningPolicy pol_serial;
  pol_serial.exec = ExecMode::serial;
  eigensolver::ConditioningPolicy pol_parallel;
  pol_parallel.exec = ExecMode::parallel;

  eigensolver::GeneralizedEigenResult res_serial, res_parallel;
  const double t_solve_serial =
      time_s([&] { res_serial = eigensolver::solve(H, serial_mats.S, pol_serial); });
  const double t_solve_parallel =
      time_s([&] { res_parallel = eigensolver::solve(H, serial_mats.S, pol_parallel); });
  const bool solve_equal = res_serial.eigenvalues == res_parallel.eigenvalues &&
                           res_serial.vectors == res_parallel.vectors;
  std::printf("solve      serial %7.3f s   parallel %7.3f s   speedup %.2fx   bitwise %s\n",
              t_solve_serial, t_solve_parallel, t_solve_serial / t_solve_parallel,
              solve_equal ? "equal" : "DIFFER");
  std::printf("lowest eigenvalue %.11f hartree, retained %zu of %zu\n",
              res_serial.eigenvalues[0], res_serial.retained_dimension, n);
  return asm_equal && solve_equal ? 0 : 1;
}
