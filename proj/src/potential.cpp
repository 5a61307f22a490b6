// Fitted interaction curves and the quantities derived from them.
//
// Parameters are kept as decimal strings and parsed once, so the values in
// the binary are exactly the published ones.

#include "hhbar/potential.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hhbar/errors.hpp"

namespace hhbar::potential {
namespace {

struct ParamStrings {
  // A[n-1][k]; A_60 entry empty, completed from the constraint.
  const char* A[6][5];
  const char* alpha[6];
  const char* beta;
};

constexpr ParamStrings kBoParams = {
    {{"-19.8582635505679", "67.6269717956708", "-20.0575886039098", "1.6436298797648",
      "-0.0417677179701"},
     {"57.5162155781683", "9.3918281802097", "3.0569545228764", "-0.2521821480278",
      "0.0965988366924"},
     {"4.7043278292101", "-16.1993647293737", "23.4284275566323", "-14.9456597423665",
      "3.8997649015388"},
     {"-19.9771658686913", "-173.8431212019852", "39.0038819732993", "-4.9839482825694",
      "0.2098970274357"},
     {"-22.3850547348492", "106.8813949154074", "-24.8069885152175", "2.2667291349955",
      "-0.0258580270297"},
     {nullptr, "0.0000097266439", "-0.0000006275304", "0.0000000184890", "-0.0000000002113"}},
    {"0.0897852714851", "0.2268196733512", "2.2437975957692", "0.1412060702801",
     "0.1048123413141", "0.0068068098389"},
    "6.1520725018366"};

constexpr ParamStrings kScaledParams = {
    {{"-20.1369672678805", "44.1781330016383", "-14.6255427563730", "1.2854178363453",
      "-0.0344425997356"},
     {"57.6405552715681", "-24.8917421281046", "8.8916405222450", "-1.4152945078081",
      "0.1428155629355"},
     {"5.4110168738119", "-17.2109690438145", "24.7666406025529", "-15.7590990169304",
      "4.1982517062010"},
     {"-20.2530003255519", "-131.5359580062383", "36.6202418042846", "2.3956839062761",
      "0.0726049211608"},
     {"-22.6615482631176", "123.3264381665587", "-29.3520833084752", "-4.7119434834608",
      "0.4403103436776"},
     {nullptr, "0.0000091571743", "-0.0000005856539", "0.0000000171095", "-0.0000000001939"}},
    {"0.0893701431156", "0.2952163755619", "2.2164844767807", "0.1171840549361",
     "0.1108374703554", "0.0067006105329"},
    "6.1431639772293"};

double parse_decimal(const char* s) { return std::strtod(s, nullptr); }

void complete_constraint(PotentialModel& m) {
  double sum = 0.0;
  for (int n = 0; n < 5; ++n) sum += m.A[n][0];
  m.A[5][0] = -sum;
}

PotentialModel build_model(Flavor flavor) {
  const ParamStrings& p = (flavor == Flavor::bo) ? kBoParams : kScaledParams;
  const PhysicalConstants c;
  PotentialModel m;
  m.flavor = flavor;
  for (int n = 0; n < 6; ++n) {
    for (int k = 0; k < 5; ++k) {
      m.A[n][k] = p.A[n][k] ? parse_decimal(p.A[n][k]) : 0.0;
    }
    m.alpha[n] = parse_decimal(p.alpha[n]);
  }
  m.beta = parse_decimal(p.beta);
  if (flavor == Flavor::bo) {
    m.E_inf = c.E_BO_inf;
    m.E_sr = c.E1_Ps;
  } else {
    m.E_inf = c.E_lep_inf();
    m.E_sr = c.mu() * c.E1_Ps;
  }
  complete_constraint(m);
  return m;
}

void check_radius(double R) {
  if (!(R > 0.0)) throw std::domain_error("potential: R must be positive");
}

// One exp(-a R^2) envelope carrying a Laurent polynomial sum_m c_m R^m.
// The fit is a list of these plus the constant E_inf; d/dR maps the family
// onto itself, which gives the analytic derivatives of any order.
struct GaussianTerm {
  double a = 0.0;
  std::map<int, double> poly;  // power -> coefficient
};

std::vector<GaussianTerm> model_terms(const PotentialModel& m) {
  std::vector<GaussianTerm> terms;
  GaussianTerm coulomb;
  coulomb.a = m.beta;
  coulomb.poly[0] = m.E_sr - m.E_inf;
  coulomb.poly[-1] = -1.0;
  terms.push_back(std::move(coulomb));
  for (int n = 0; n < 6; ++n) {
    GaussianTerm t;
    t.a = m.alpha[n];
    for (int k = 0; k < 5; ++k) {
      if (m.A[n][k] != 0.0) t.poly[k] = m.A[n][k];
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

GaussianTerm differentiate(const GaussianTerm& t) {
  GaussianTerm d;
  d.a = t.a;
  for (const auto& [p, c] : t.poly) {
    if (p != 0) d.poly[p - 1] += p * c;
    d.poly[p + 1] += -2.0 * t.a * c;
  }
  return d;
}

double eval_terms(const std::vector<GaussianTerm>& terms, double R) {
  double v = 0.0;
  for (const auto& t : terms) {
    double poly = 0.0;
    for (const auto& [p, c] : t.poly) poly += c * std::pow(R, p);
    v += poly * std::exp(-t.a * R * R);
  }
  return v;
}

}  // namespace

PotentialModel load_builtin(Flavor flavor) { return build_model(flavor); }

PotentialModel load_with_overrides(Flavor flavor, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("potential: cannot open parameter file " + path);
  PotentialModel m = build_model(flavor);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string name, eq;
    double value = 0.0;
    if (!(ls >> name)) continue;  // blank line
    if (!(ls >> eq >> value) || eq != "=") {
      throw config_error("potential: malformed line " + std::to_string(lineno) + " in " + path);
    }
    if (name == "beta") {
      m.beta = value;
    } else if (name.size() == 7 && name.compare(0, 6, "alpha_") == 0 && name[6] >= '1' &&
               name[6] <= '6') {
      m.alpha[name[6] - '1'] = value;
    } else if (name.size() == 4 && name[0] == 'A' && name[1] == '_' && name[2] >= '1' &&
               name[2] <= '6' && name[3] >= '0' && name[3] <= '4') {
      int n = name[2] - '1';
      int k = name[3] - '0';
      if (n == 5 && k == 0) {
        throw config_error("potential: A_60 is fixed by the constraint and cannot be set");
      }
      m.A[n][k] = value;
    } else {
      throw config_error("potential: unknown parameter '" + name + "' in " + path);
    }
  }
  complete_constraint(m);
  return m;
}

double eval(const PotentialModel& m, double R) {
  check_radius(R);
  const double R2 = R * R;
  double v = m.E_inf + (m.E_sr - m.E_inf - 1.0 / R) * std::exp(-m.beta * R2);
  for (int n = 0; n < 6; ++n) {
    // Horner over k
    double poly = m.A[n][4];
    for (int k = 3; k >= 0; --k) poly = poly * R + m.A[n][k];
    v += poly * std::exp(-m.alpha[n] * R2);
  }
  return v;
}

double eval_derivative(const PotentialModel& m, double R, int order) {
  check_radius(R);
  if (order < 1 || order > 4) {
    throw std::domain_error("potential: derivative order must be in [1, 4]");
  }
  std::vector<GaussianTerm> terms = model_terms(m);
  for (int o = 0; o < order; ++o) {
    for (auto& t : terms) t = differentiate(t);
  }
  return eval_terms(terms, R);
}

double short_range_reference(const PhysicalConstants& constants, double R, Flavor flavor) {
  check_radius(R);
  const double E_sr =
      (flavor == Flavor::bo) ? constants.E1_Ps : constants.mu() * constants.E1_Ps;
  return E_sr - 1.0 / R;
}

double long_range_reference(double E_inf, std::span<const std::pair<int, double>> C, double R) {
  check_radius(R);
  double v = E_inf;
  for (const auto& [n, cn] : C) v -= cn / std::pow(R, n);
  return v;
}

std::pair<double, double> mass_scale_grid_point(double R, double E_BO_value,
                                                const PhysicalConstants& constants) {
  check_radius(R);
  const double mu = constants.mu();
  return {R / mu, mu * E_BO_value};
}

double delta_lep(const PotentialModel& scaled, const PotentialModel& bo, double R) {
  return 1.0e3 * (eval(scaled, R) - eval(bo, R));
}

double nonadiabatic_series(const PotentialModel& bo_model, double R, int n_max_terms,
                           const PhysicalConstants& constants) {
  check_radius(R);
  if (n_max_terms < 2) return 0.0;
  if (n_max_terms > 4) {
    throw std::domain_error("potential: nonadiabatic series supported up to n = 4");
  }
  // derivatives 0..n_max_terms of the fit at R
  double deriv[5];
  deriv[0] = eval(bo_model, R);
  for (int k = 1; k <= n_max_terms; ++k) deriv[k] = eval_derivative(bo_model, R, k);

  auto factorial = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };

  const double inv_mp = -1.0 / constants.m_p;
  double total = 0.0;
  for (int n = 2; n <= n_max_terms; ++n) {
    double inner = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double ratio = factorial(n) / factorial(k);
      inner += ratio * ratio * std::pow(R, k) / factorial(n - k) * deriv[k];
    }
    total += std::pow(inv_mp, n) * inner;
  }
  return total;
}

double protonium_level(int nu, const PhysicalConstants& constants) {
  if (nu < 1) throw std::domain_error("protonium_level: nu must be >= 1");
  const double dnu = static_cast<double>(nu);
  return -constants.m_p / (4.0 * dnu * dnu);
}

}  // namespace hhbar::potential
