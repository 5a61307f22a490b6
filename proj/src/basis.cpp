#include "hhbar/basis.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hhbar/integrals.hpp"

namespace hhbar::basis {

double normalization(TrigKind kind, double nu, int l, double alpha_osc) {
  if (!(nu > 0.0)) throw std::domain_error("basis: nu must be positive");
  if (l < 0) throw std::domain_error("basis: l must be non-negative");
  // <g|g> before normalization:
  //   cos: (1/2) [ M(2l+2, 2nu) + Re M(2l+2, 2nu(1 - i alpha)) ]
  //   sin: (1/2) [ M(2l+2, 2nu) - Re M(2l+2, 2nu(1 - i alpha)) ]
  // with M the Gaussian moment; follows from 2cos^2 x = 1 + cos 2x and
  // 2sin^2 x = 1 - cos 2x.
  const int m = 2 * l + 2;
  const double plain = integrals::moment(m, {2.0 * nu, 0.0}).real();
  const double osc = integrals::moment(m, {2.0 * nu, -2.0 * nu * alpha_osc}).real();
  const double self = 0.5 * ((kind == TrigKind::cosine) ? plain + osc : plain - osc);
  return 1.0 / std::sqrt(self);
}

std::vector<BasisFunction> build(const BasisSpec& spec) {
  if (spec.n_max < 2) throw std::domain_error("basis: n_max < 2 gives a degenerate grid");
  if (!(spec.r_min > 0.0) || !(spec.r_max > spec.r_min)) {
    throw std::domain_error("basis: require 0 < r_min < r_max");
  }
  if (spec.l < 0) throw std::domain_error("basis: l must be non-negative");

  std::vector<BasisFunction> fs;
  fs.reserve(2 * spec.n_max);
  const double ratio = spec.r_max / spec.r_min;
  for (std::size_t n = 1; n <= spec.n_max; ++n) {
    const double exponent =
        static_cast<double>(n - 1) / static_cast<double>(spec.n_max - 1);
    const double r_n = spec.r_min * std::pow(ratio, exponent);
    const double nu = 1.0 / (r_n * r_n);
    for (TrigKind kind : {TrigKind::cosine, TrigKind::sine}) {
      BasisFunction f;
      f.kind = kind;
      f.nu = nu;
      f.l = spec.l;
      f.alpha_osc = spec.alpha_osc;
      f.norm = normalization(kind, nu, spec.l, spec.alpha_osc);
      fs.push_back(f);
    }
  }
  return fs;
}

double evaluate(const BasisFunction& f, double R) {
  if (R < 0.0) throw std::domain_error("basis: R must be non-negative");
  const double phase = f.alpha_osc * f.nu * R * R;
  const double trig = (f.kind == TrigKind::cosine) ? std::cos(phase) : std::sin(phase);
  return f.norm * std::pow(R, f.l) * std::exp(-f.nu * R * R) * trig;
}

}  // namespace hhbar::basis
