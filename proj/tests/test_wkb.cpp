#include "hhbar/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "doctest.h"
#include "hhbar/constants.hpp"
#include "hhbar/errors.hpp"
#include "hhbar/reference_data.hpp"

using namespace hhbar;

namespace {

const PhysicalConstants kConstants;

wkb::TailParams bo_tail() {
  return wkb::tail_from_beta6(reference::beta6_bo, kConstants.mu_n());
}
wkb::TailParams scaled_tail() {
  return wkb::tail_from_beta6(reference::beta6_scaled, kConstants.mu_n());
}

std::vector<wkb::CalibrationRow> rows_for(std::span<const int> nus, bool scaled) {
  std::vector<wkb::CalibrationRow> rows;
  for (int nu : nus) {
    const auto& lvl = reference::levels_l0()[nu - 1];
    const auto& th = *std::find_if(reference::threshold_numbers().begin(),
                                   reference::threshold_numbers().end(),
                                   [&](const auto& r) { return r.nu == nu; });
    rows.push_back({nu, scaled ? lvl.eps_scaled : lvl.eps_bo,
                    scaled ? th.nu_th_scaled : th.nu_th_bo});
  }
  return rows;
}

}  // namespace

TEST_CASE("beta6 round trips") {
  CHECK(wkb::beta6(0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

  // published length scales recover a C6 near 6.50 and round trip exactly
  const auto bo = bo_tail();
  CHECK(bo.C6 == doctest::Approx(6.50).epsilon(2e-3));
  CHECK(wkb::beta6(bo.C6, bo.M) == doctest::Approx(reference::beta6_bo).epsilon(1e-12));
  const auto ms = scaled_tail();
  CHECK(wkb::beta6(ms.C6, ms.M) == doctest::Approx(reference::beta6_scaled).epsilon(1e-12));

  CHECK(bo.a_bar == bo.b);
  CHECK(bo.b == doctest::Approx(0.4779888 * reference::beta6_bo).epsilon(1e-12));

  CHECK_THROWS_AS(wkb::beta6(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(wkb::beta6(1.0, 0.0), std::domain_error);
}

TEST_CASE("quantization function structure") {
  auto tail = bo_tail();
  tail.d = 9.0;
  tail.D = 1.0;
  CHECK(wkb::quantization_function(0.0, tail) == 0.0);
  CHECK_THROWS_AS(wkb::quantization_function(-1e-3, tail), std::domain_error);

  wkb::TailParams incomplete = bo_tail();
  CHECK_THROWS_AS(wkb::quantization_function(1e-4, incomplete), numerical_error);

  // deep-binding limit: the (kappa beta6)^{2/3} growth term dominates
  const double eps_deep = 10.0;
  const double kappa = std::sqrt(2.0 * tail.M * eps_deep);
  const double x = kappa * tail.beta6;
  const double x23 = std::cbrt(x * x);
  const double growth = std::tgamma(2.0 / 3.0) * x23 /
                        (4.0 * std::sqrt(std::numbers::pi) * std::tgamma(7.0 / 6.0));
  const double asym = -0.125 + *tail.D / (2.0 * std::numbers::pi * x23) + growth;
  CHECK(wkb::quantization_function(eps_deep, tail) == doctest::Approx(asym).epsilon(1e-4));
  CHECK(wkb::quantization_function(eps_deep, tail) > 0.5 * growth);

  // with d = D = 0 the near-threshold slope is positive: F ~ b kappa / pi
  wkb::TailParams plain = bo_tail();
  plain.d = 0.0;
  plain.D = 0.0;
  const double eps_tiny = 1e-12;
  const double kappa_tiny = std::sqrt(2.0 * plain.M * eps_tiny);
  CHECK(wkb::quantization_function(eps_tiny, plain) ==
        doctest::Approx(plain.b * kappa_tiny / std::numbers::pi).epsilon(1e-3));
  CHECK(wkb::quantization_function(eps_tiny, plain) > 0.0);
}

TEST_CASE("calibration recovers synthetic constants") {
  auto truth = bo_tail();
  truth.d = 7.3;
  truth.D = 1.9;
  std::vector<wkb::CalibrationRow> rows;
  for (double eps : {5e-5, 6.6e-4, 6e-3, 2.3e-2, 9e-2}) {
    rows.push_back({10, eps, wkb::threshold_quantum_number(10, eps, truth)});
  }
  const auto fit = wkb::calibrate_tail_constants(rows, bo_tail());
  CHECK_FALSE(fit.d_unidentified);
  CHECK(*fit.params.d == doctest::Approx(7.3).epsilon(1e-6));
  CHECK(*fit.params.D == doctest::Approx(1.9).epsilon(1e-6));
  CHECK(fit.rms_residual < 1e-10);

  CHECK_THROWS_AS(
      wkb::calibrate_tail_constants(std::vector<wkb::CalibrationRow>(3), bo_tail()),
      std::invalid_argument);
}

TEST_CASE("calibration on deep rows leaves d unidentified but predicts deep rows") {
  // far from threshold the d^2 column is negligible; the rank cutoff must
  // zero that direction instead of amplifying target rounding noise
  const int fit_nus[] = {20, 22, 24, 26};
  const auto fit = wkb::calibrate_tail_constants(rows_for(fit_nus, false), bo_tail());
  CHECK(fit.d_unidentified);
  const int held_out[] = {21, 23, 25, 27};
  for (const auto& row : rows_for(held_out, false)) {
    const double nth = wkb::threshold_quantum_number(row.nu, row.eps, fit.params);
    CHECK(std::abs(nth - row.nu_th_target) < 0.02);
  }
}

TEST_CASE("calibration spanning the threshold reproduces the reference table") {
  for (bool scaled : {false, true}) {
    const auto base = scaled ? scaled_tail() : bo_tail();
    const int fit_nus[] = {22, 25, 28, 29};
    const auto fit = wkb::calibrate_tail_constants(rows_for(fit_nus, scaled), base);
    CHECK_FALSE(fit.d_unidentified);
    // all table rows, including held-out ones, within the print precision
    for (const auto& th : reference::threshold_numbers()) {
      const auto& lvl = reference::levels_l0()[th.nu - 1];
      const double nth = wkb::threshold_quantum_number(
          th.nu, scaled ? lvl.eps_scaled : lvl.eps_bo, fit.params);
      CHECK(std::abs(nth - (scaled ? th.nu_th_scaled : th.nu_th_bo)) < 0.02);
    }
    // predicted bound count stabilizes at 29 past nu = 22, except the
    // published dip at nu = 28 (value 28.94)
    for (int nu : {23, 24, 25, 26, 27, 29}) {
      const auto& lvl = reference::levels_l0()[nu - 1];
      const double nth = wkb::threshold_quantum_number(
          nu, scaled ? lvl.eps_scaled : lvl.eps_bo, fit.params);
      CHECK(static_cast<int>(std::floor(nth)) == 29);
    }
  }
}

TEST_CASE("wkb scattering length") {
  // calibrated on rows spanning the threshold, evaluated at the last bound
  // state; the scaled flavor lands on the published 7.5
  {
    const auto base = scaled_tail();
    const int fit_nus[] = {22, 25, 28, 29};
    const auto fit = wkb::calibrate_tail_constants(rows_for(fit_nus, true), base);
    const double a = wkb::wkb_scattering_length(reference::levels_l0()[28].eps_scaled,
                                                fit.params);
    CHECK(a == doctest::Approx(7.5).epsilon(0.1 / 7.5));
  }
  // the plain flavor's table pins F(eps_29) = 0.340, which maps to 7.74;
  // the published rounded value 7.6 is not reachable from the same table
  // (see the acceptance suite notes)
  {
    const auto base = bo_tail();
    const int fit_nus[] = {22, 25, 28, 29};
    const auto fit = wkb::calibrate_tail_constants(rows_for(fit_nus, false), base);
    const double a =
        wkb::wkb_scattering_length(reference::levels_l0()[28].eps_bo, fit.params);
    CHECK(a == doctest::Approx(7.74).epsilon(0.1 / 7.74));
  }

  // half-integer F: the tangent term vanishes and a = a_bar exactly
  auto tail = bo_tail();
  tail.d = 0.0;
  tail.D = 0.0;
  // bisect F(eps) = 1/2 (F is continuous and increasing through this range)
  double lo = 1e-9, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (wkb::quantization_function(mid, tail) < 0.5 ? lo : hi) = mid;
  }
  const double a_half = wkb::wkb_scattering_length(0.5 * (lo + hi), tail);
  CHECK(a_half == doctest::Approx(tail.a_bar).epsilon(1e-6));

  // integer F is a pole
  CHECK_THROWS_AS(wkb::wkb_scattering_length(0.0, tail), numerical_error);
}

TEST_CASE("scale invariance of the tail formulation") {
  // C6 -> s C6, M -> M/s keeps beta6 and with it F and the lengths
  auto t1 = wkb::tail_from_c6(6.5, kConstants.mu_n());
  auto t2 = wkb::tail_from_c6(6.5 * 3.7, kConstants.mu_n() / 3.7);
  CHECK(t1.beta6 == doctest::Approx(t2.beta6).epsilon(1e-14));
  t1.d = 5.0;
  t1.D = 2.0;
  t2.d = 5.0;
  t2.D = 2.0;
  // kappa changes with M, so invariance holds at matched kappa beta6, i.e.
  // eps2 = eps1 * s
  const double eps1 = 1e-4;
  const double eps2 = eps1 * 3.7;
  CHECK(wkb::quantization_function(eps1, t1) ==
        doctest::Approx(wkb::quantization_function(eps2, t2)).epsilon(1e-12));
  CHECK(wkb::wkb_scattering_length(eps1, t1) ==
        doctest::Approx(wkb::wkb_scattering_length(eps2, t2)).epsilon(1e-12));
}
