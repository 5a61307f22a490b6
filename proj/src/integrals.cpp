// Closed-form radial integrals.
//
// Every matrix element reduces to the single primitive
//   moment(m, z) = int R^m exp(-z R^2) dR
// by writing the oscillating factor as complex exponentials:
//   exp(-nu R^2) cos(a nu R^2) = [exp(-z R^2) + exp(-conj(z) R^2)]/2,
//   exp(-nu R^2) sin(a nu R^2) = [exp(-z R^2) - exp(-conj(z) R^2)]/(2i),
// with z = nu (1 - i a). Re(z) stays positive in every product, so the
// principal branch never crosses the cut. Each function's two terms are
// conjugates of each other, so of the four cross terms in a product only two
// are independent; summing 2 Re(...) over those makes every element exactly
// real instead of real up to roundoff.

#include "hhbar/integrals.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hhbar::integrals {
namespace {

using cd = std::complex<double>;

constexpr int kMaxMomentPower = 63;

const double* gamma_half_table() {
  // Gamma((m+1)/2) for m = 0..kMaxMomentPower via the recurrence
  // Gamma(x+1) = x Gamma(x) from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
  static const std::array<double, kMaxMomentPower + 1> table = [] {
    std::array<double, kMaxMomentPower + 1> t{};
    t[0] = std::sqrt(std::numbers::pi);
    t[1] = 1.0;
    for (int m = 2; m <= kMaxMomentPower; ++m) {
      t[m] = 0.5 * (m - 1) * t[m - 2];
    }
    return t;
  }();
  return table.data();
}

// g = norm R^l [c exp(-z R^2) + conj(c) exp(-conj(z) R^2)]
struct Decomposed {
  cd c;  // leading coefficient; the partner term is its conjugate
  cd z;
};

Decomposed decompose(const basis::BasisFunction& f) {
  Decomposed d;
  d.z = cd(f.nu, -f.alpha_osc * f.nu);
  d.c = (f.kind == basis::TrigKind::cosine) ? cd(0.5, 0.0) : cd(0.0, -0.5);
  return d;
}

void check_compatible(const basis::BasisFunction& fi, const basis::BasisFunction& fj) {
  if (fi.l != fj.l || fi.alpha_osc != fj.alpha_osc) {
    throw std::invalid_argument("integrals: basis functions must share l and alpha_osc");
  }
}

// norm_i norm_j int g_i g_j R^{m_extra} exp(-a_extra R^2) R^2 dR, through the
// two independent cross terms (i1,j1) and (i1,conj j1); the other two are
// their conjugates.
double pair_integral(const basis::BasisFunction& fi, const basis::BasisFunction& fj,
                     int m_extra, double a_extra) {
  const Decomposed di = decompose(fi);
  const Decomposed dj = decompose(fj);
  const int m = 2 * fi.l + 2 + m_extra;
  const cd same = di.c * dj.c * moment(m, di.z + dj.z + a_extra);
  const cd cross = di.c * std::conj(dj.c) * moment(m, di.z + std::conj(dj.z) + a_extra);
  return fi.norm * fj.norm * 2.0 * (same.real() + cross.real());
}

}  // namespace

cd moment(int m, cd z) {
  if (m < 0 || m > kMaxMomentPower) throw std::domain_error("moment: unsupported power");
  if (!(z.real() > 0.0)) throw std::domain_error("moment: Re(z) must be positive");
  return gamma_half_table()[m] / (2.0 * std::pow(z, 0.5 * (m + 1)));
}

double overlap_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj) {
  check_compatible(fi, fj);
  return pair_integral(fi, fj, 0, 0.0);
}

double kinetic_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj,
                       double mu_n) {
  check_compatible(fi, fj);
  if (!(mu_n > 0.0)) throw std::domain_error("kinetic_element: mu_n must be positive");
  const Decomposed di = decompose(fi);
  const Decomposed dj = decompose(fj);
  const int l = fi.l;
  // g' = norm sum_t c_t (l R^{l-1} - 2 z_t R^{l+1}) exp(-z_t R^2), so the
  // derivative product integrand carries powers 2l, 2l+2, 2l+4; the
  // centrifugal piece contributes at power 2l. Same conjugate pairing as in
  // pair_integral, with the coefficient now a real-coefficient polynomial in
  // the exponents.
  auto term = [l](cd zi, cd zj) {
    const cd zs = zi + zj;
    cd v = 4.0 * zi * zj * moment(2 * l + 4, zs);
    v -= 2.0 * static_cast<double>(l) * zs * moment(2 * l + 2, zs);
    if (l > 0) {
      // l^2 from the derivative product plus l(l+1) from the centrifugal term
      v += static_cast<double>(l * l + l * (l + 1)) * moment(2 * l, zs);
    }
    return v;
  };
  const cd same = di.c * dj.c * term(di.z, dj.z);
  const cd cross = di.c * std::conj(dj.c) * term(di.z, std::conj(dj.z));
  return fi.norm * fj.norm * 2.0 * (same.real() + cross.real()) / (2.0 * mu_n);
}

double potential_element(const basis::BasisFunction& fi, const basis::BasisFunction& fj,
                         const potential::PotentialModel& model) {
  check_compatible(fi, fj);
  double v = model.E_inf * pair_integral(fi, fj, 0, 0.0);
  v += (model.E_sr - model.E_inf) * pair_integral(fi, fj, 0, model.beta);
  v -= pair_integral(fi, fj, -1, model.beta);  // power 2l+1 >= 1, still convergent
  for (int n = 0; n < 6; ++n) {
    for (int k = 0; k < 5; ++k) {
      if (model.A[n][k] != 0.0) {
        v += model.A[n][k] * pair_integral(fi, fj, k, model.alpha[n]);
      }
    }
  }
  return v;
}

RadialMatrices assemble_matrices(std::span<const basis::BasisFunction> fs,
                                 const potential::PotentialModel& model, double mu_n,
                                 ExecMode mode) {
  const std::size_t n = fs.size();
  RadialMatrices out{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  // Upper triangle flattened so the parallel loop is balanced.
  const std::size_t n_pairs = n * (n + 1) / 2;
  parallel_for(n_pairs, mode, [&](std::size_t p) {
    // p -> (i, j), i <= j, row-major over the upper triangle
    std::size_t i = 0;
    std::size_t row_len = n;
    std::size_t q = p;
    while (q >= row_len) {
      q -= row_len;
      --row_len;
      ++i;
    }
    const std::size_t j = i + q;
    const double s = overlap_element(fs[i], fs[j]);
    const double t = kinetic_element(fs[i], fs[j], mu_n);
    const double v = potential_element(fs[i], fs[j], model);
    out.S(i, j) = s;
    out.S(j, i) = s;
    out.T(i, j) = t;
    out.T(j, i) = t;
    out.V(i, j) = v;
    out.V(j, i) = v;
  });
  return out;
}

}  // namespace hhbar::integrals
