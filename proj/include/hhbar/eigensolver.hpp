#pragma once

#include <cstddef>
#include <vector>

#include "hhbar/matrix.hpp"
#include "hhbar/parallel.hpp"

namespace hhbar::eigensolver {

struct ConditioningPolicy {
  // Overlap eigenpairs with s_k < tau * s_max are discarded before the
  // reduction to a standard problem.
  double tau = 1e-12;
  // Compensated (Neumaier) accumulation in the two matrix products of the
  // reduction.
  bool compensated = true;
  ExecMode exec = ExecMode::parallel;
};

struct GeneralizedEigenResult {
  std::vector<double> eigenvalues;   // ascending, one per retained direction
  Matrix vectors;                    // n x r; column k solves H c = E_k S c
  std::size_t retained_dimension = 0;
  std::size_t dropped_count = 0;
  double overlap_condition = 0.0;    // ratio of extreme overlap eigenvalues
};

// Solves (H) c = E S c for symmetric H and positive semi-definite S by
// canonical orthogonalization: diagonalize S, drop directions below the
// relative cutoff, form the reduced standard problem, diagonalize, transform
// back. Deterministic: identical inputs and policy give bitwise-identical
// results.
GeneralizedEigenResult solve(const Matrix& H, const Matrix& S,
                             const ConditioningPolicy& policy = {});

// max_k ||(H - E_k S) c_k|| / (||H||_F ||c_k||) over the retained pairs.
double residual_check(const Matrix& H, const Matrix& S, const GeneralizedEigenResult& result);

namespace detail {

// Cyclic Jacobi diagonalization of a symmetric matrix; eigenpairs are
// returned unsorted in vals / columns of vecs.
void jacobi_eigensymm(const Matrix& A, std::vector<double>& vals, Matrix& vecs);

}  // namespace detail

}  // namespace hhbar::eigensolver
