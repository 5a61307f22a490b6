// Generalized symmetric eigensolver with explicit conditioning control.
//
// The oscillating-Gaussian overlap on a long geometric ladder is
// near-singular (condition 1e12 and beyond at 240 functions), so Cholesky
// factorization is out; canonical orthogonalization with a relative cutoff
// keeps the problem well posed and makes the discarded subspace explicit.

#include "hhbar/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hhbar/errors.hpp"

namespace hhbar::eigensolver {
namespace {

void check_symmetric(const Matrix& A, const char* name) {
  const std::size_t n = A.rows();
  if (A.cols() != n) throw std::invalid_argument(std::string(name) + " is not square");
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(A(i, j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(A(i, j) - A(j, i)) > 1e-12 * (max_abs + 1.0)) {
        throw std::invalid_argument(std::string(name) + " is not symmetric");
      }
    }
  }
}

double plain_dot(const double* x, const double* y, std::size_t n, std::size_t stride_y) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += x[k] * y[k * stride_y];
  return s;
}

// Neumaier-compensated dot product; deterministic fixed-order accumulation.
double compensated_dot(const double* x, const double* y, std::size_t n, std::size_t stride_y) {
  double s = 0.0;
  double c = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double term = x[k] * y[k * stride_y];
    const double t = s + term;
    if (std::abs(s) >= std::abs(term)) {
      c += (s - t) + term;
    } else {
      c += (term - t) + s;
    }
    s = t;
  }
  return s + c;
}

}  // namespace

namespace detail {

void jacobi_eigensymm(const Matrix& A, std::vector<double>& vals, Matrix& vecs) {
  const std::size_t n = A.rows();
  Matrix a = A;
  vecs = Matrix::identity(n);
  vals.assign(n, 0.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
    }
    if (off == 0.0) break;
    // First sweeps rotate only the largest entries; afterwards everything.
    const double thresh = (sweep < 3) ? 0.2 * off / static_cast<double>(n * n) : 0.0;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh) continue;

        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t;
        if (std::abs(theta) > 1e100) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;

        a(p, p) -= h;
        a(q, q) += h;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(k, q) = akq + s * (akp - tau * akq);
          a(p, k) = a(k, p);
          a(q, k) = a(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vecs(k, p);
          const double vkq = vecs(k, q);
          vecs(k, p) = vkp - s * (vkq + tau * vkp);
          vecs(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i);
}

}  // namespace detail

GeneralizedEigenResult solve(const Matrix& H, const Matrix& S, const ConditioningPolicy& policy) {
  check_symmetric(H, "H");
  check_symmetric(S, "S");
  const std::size_t n = H.rows();
  if (S.rows() != n) throw std::invalid_argument("H and S dimensions differ");
  if (n == 0) throw std::invalid_argument("empty problem");

  // Overlap spectrum
  std::vector<double> s_vals;
  Matrix U;
  detail::jacobi_eigensymm(S, s_vals, U);

  const double s_max = *std::max_element(s_vals.begin(), s_vals.end());
  const double s_min = *std::min_element(s_vals.begin(), s_vals.end());
  if (!(s_max > 0.0)) throw basis_collapse_error("eigensolver: overlap has no positive spectrum");

  // Retain directions above the relative cutoff, largest overlap first.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return s_vals[a] > s_vals[b]; });
  std::vector<std::size_t> keep;
  for (std::size_t k : order) {
    if (s_vals[k] >= policy.tau * s_max) keep.push_back(k);
  }
  const std::size_t r = keep.size();
  if (r == 0) throw basis_collapse_error("eigensolver: all overlap eigenvalues below cutoff");

  // Whitening transform X = U_keep diag(1/sqrt(s))
  Matrix X(n, r);
  for (std::size_t k = 0; k < r; ++k) {
    const double inv_sqrt = 1.0 / std::sqrt(s_vals[keep[k]]);
    for (std::size_t i = 0; i < n; ++i) X(i, k) = U(i, keep[k]) * inv_sqrt;
  }

  const auto dot = policy.compensated ? compensated_dot : plain_dot;

  // Reduced problem H~ = X^T H X, formed as Y = H X then X^T Y.
  Matrix Y(n, r);
  parallel_for(n, policy.exec, [&](std::size_t i) {
    for (std::size_t k = 0; k < r; ++k) {
      Y(i, k) = dot(&H.data()[i * n], &X.data()[k], n, r);
    }
  });
  Matrix Xt(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) Xt(k, i) = X(i, k);
  }
  Matrix Ht(r, r);
  parallel_for(r, policy.exec, [&](std::size_t k) {
    for (std::size_t m = 0; m < r; ++m) {
      Ht(k, m) = dot(&Xt.data()[k * n], &Y.data()[m], n, r);
    }
  });
  // Exact symmetry for the Jacobi stage
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t m = k + 1; m < r; ++m) {
      const double v = 0.5 * (Ht(k, m) + Ht(m, k));
      Ht(k, m) = v;
      Ht(m, k) = v;
    }
  }

  std::vector<double> e_vals;
  Matrix W;
  detail::jacobi_eigensymm(Ht, e_vals, W);

  // Back-transform C = X W
  Matrix C(n, r);
  parallel_for(n, policy.exec, [&](std::size_t i) {
    for (std::size_t k = 0; k < r; ++k) {
      double v = 0.0;
      for (std::size_t m = 0; m < r; ++m) v += X(i, m) * W(m, k);
      C(i, k) = v;
    }
  });

  // Ascending eigenvalues; degeneracies broken by the dominant-coefficient
  // basis index.
  std::vector<std::size_t> dominant(r);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::abs(C(i, k));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    dominant[k] = best;
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (e_vals[a] != e_vals[b]) return e_vals[a] < e_vals[b];
    return dominant[a] < dominant[b];
  });

  GeneralizedEigenResult out;
  out.retained_dimension = r;
  out.dropped_count = n - r;
  out.overlap_condition = s_max / s_min;
  out.eigenvalues.resize(r);
  out.vectors = Matrix(n, r);
  for (std::size_t k = 0; k < r; ++k) {
    out.eigenvalues[k] = e_vals[perm[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = C(i, perm[k]);
  }
  return out;
}

double residual_check(const Matrix& H, const Matrix& S, const GeneralizedEigenResult& result) {
  const std::size_t n = H.rows();
  double h_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h_norm += H(i, j) * H(i, j);
  }
  h_norm = std::sqrt(h_norm);

  double worst = 0.0;
  for (std::size_t k = 0; k < result.retained_dimension; ++k) {
    const double e = result.eigenvalues[k];
    double res2 = 0.0;
    double c_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double hc = 0.0;
      double sc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double cj = result.vectors(j, k);
        hc += H(i, j) * cj;
        sc += S(i, j) * cj;
      }
      const double ri = hc - e * sc;
      res2 += ri * ri;
      const double ci = result.vectors(i, k);
      c_norm2 += ci * ci;
    }
    worst = std::max(worst, std::sqrt(res2) / (h_norm * std::sqrt(c_norm2)));
  }
  return worst;
}

}  // namespace hhbar::eigensolver
