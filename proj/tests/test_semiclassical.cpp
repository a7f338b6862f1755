// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Semiclassical route: spectral density, the pole-regularized scale-free
// integral J, its finite-part cross-check, and the assembled momentum.
// Frozen values were computed with 30-digit arithmetic at m_N = 1836, trap
// frequencies (0.98, 1.00, 1.03), dimensionless chiral coupling 1e-3 and
// B0 = (1e-4, -2e-4, 3e-4).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "casmom/errors.hpp"
#include "casmom/params.hpp"
#include "casmom/response.hpp"
#include "casmom/semiclassical.hpp"

using namespace casmom;

namespace {

// Reference value of J = FP int_0^inf u^4 (xi/2 - gamma/w) du in scale-free
// form, from an independent 50-digit residue evaluation:
//   J = 1699/810 - (3682/1215) ln 2.
constexpr double kJRef = -0.0030188632277519585;

ModelParams make_point() {
  RawParams raw;
  raw.omega_x = 0.98;
  raw.omega_y = 1.00;
  raw.omega_z = 1.03;
  const ModelParams s = derive_params(raw);
  raw.C = 1e-3 * std::pow(2.0 * s.mu, 1.5) * s.omega_sum *
          std::sqrt(s.omega_x * s.omega_y * s.omega_z) / std::sqrt(s.hbar);
  raw.B0 = Eigen::Vector3d(1e-4, -2e-4, 3e-4);
  return derive_params(raw);
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace

TEST_CASE("spectral density: frozen values, limits and guards") {
  const ModelParams p = make_point();

  CHECK(sc_integrand(0.0, p) == 0.0);
  CHECK(rel(sc_integrand(0.5, p), 1.0267245808142952e-11) < 1e-12);
  CHECK(rel(sc_integrand(3.0, p), -4.6136604989836495e-10) < 1e-12);

  // w^-5 tail: doubling the frequency divides the density by 32.
  const double ratio = sc_integrand(100.0, p) / sc_integrand(200.0, p);
  CHECK(rel(ratio, 32.0) < 2e-2);

  CHECK_THROWS_AS(sc_integrand(p.omega_0, p), OnResonance);
  CHECK_THROWS_AS(sc_integrand(2.0 * p.omega_0, p), OnResonance);
  CHECK_THROWS_AS(sc_integrand(-0.1, p), NonPositiveInput);
}

TEST_CASE("regularized integral J: ladder, cross-checks and reference") {
  const ScIntegralReport rep = sc_scaled_integral(ScQuadratureSpec{});
  CHECK(rep.ladder_values.size() == 8);
  for (double lv : rep.ladder_values)
    CHECK(std::abs(lv - kJRef) < 0.02 * std::abs(kJRef));
  CHECK(std::abs(rep.value - kJRef) < 5e-9);
  CHECK(rep.extrapolation_error < 1e-10);

  // Independent eps spacing must land on the same number.
  const ScIntegralReport alt = sc_scaled_integral(sc_alternate_ladder());
  CHECK(std::abs(alt.value - rep.value) < 2e-8);

  // Hadamard finite-part route, no eps at all.
  CHECK(std::abs(sc_scaled_integral_finite_part() - kJRef) < 5e-8);

  // The closed-form reference constant -1/243 does not reproduce J; the
  // measured ratio is stable and frozen here so any change is visible.
  CHECK(rel(rep.value / (-1.0 / 243.0), 0.73358376434372585) < 1e-5);
}

TEST_CASE("ladder validation and convergence failure") {
  ScQuadratureSpec spec;
  spec.eps_ladder = {1e-2, 5e-3};
  CHECK_THROWS_AS(sc_scaled_integral(spec), NonPositiveInput);

  spec.eps_ladder = {1e-2, 1e-2, 5e-3};
  CHECK_THROWS_AS(sc_scaled_integral(spec), NonPositiveInput);

  // Three nearly equal rungs cannot support a quadratic extrapolation to
  // 1e-12: the truncated and full ladders disagree and the report refuses.
  spec.eps_ladder = {1e-2, 9e-3, 8e-3};
  spec.rel_tol = 1e-12;
  try {
    sc_scaled_integral(spec);
    FAIL("expected QuadratureNotConverged");
  } catch (const QuadratureNotConverged &e) {
    CHECK(e.category() == ErrorCategory::kConvergence);
    CHECK(exit_code(e.category()) == 3);
  }
}

TEST_CASE("assembled momentum: prefactor, numeric and closed forms") {
  const ModelParams p = make_point();
  CHECK(rel(sc_prefactor(p), -1.4832647825520321e-11) < 1e-12);

  // Short valid ladder keeps this case fast; the identity is exact because
  // the same spec drives both evaluations.
  ScQuadratureSpec spec;
  spec.eps_ladder = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
  spec.rel_tol = 1e-3;
  const ScIntegralReport rep = sc_scaled_integral(spec);
  const Eigen::Vector3d num = sc_momentum_numeric(p, spec);
  const Eigen::Vector3d want = sc_prefactor(p) * rep.value * p.B0;
  CHECK((num - want).norm() <= 1e-15 * want.norm());

  const Eigen::Vector3d closed = sc_momentum_closed(p);
  const Eigen::Vector3d want_closed = sc_prefactor(p) * (-1.0 / 243.0) * p.B0;
  CHECK((closed - want_closed).norm() <= 1e-15 * want_closed.norm());

  // Without a chiral coupling or a field there is no momentum.
  RawParams raw;
  raw.omega_x = 0.98;
  raw.omega_y = 1.00;
  raw.omega_z = 1.03;
  raw.B0 = Eigen::Vector3d(1e-4, -2e-4, 3e-4);
  CHECK(sc_momentum_numeric(derive_params(raw), spec).isZero());
  RawParams raw2 = raw;
  raw2.C = 1e-3;
  raw2.B0.setZero();
  CHECK(sc_momentum_numeric(derive_params(raw2), spec).isZero());
}

TEST_CASE("Green-function reduction collapses to the on-shell limit") {
  const ModelParams p = make_point();
  const double w = 0.5;

  const auto [lor2, shell2] = green_reduction_check(w, 1e-2, p);
  const auto [lor3, shell3] = green_reduction_check(w, 1e-3, p);
  const double r2 = lor2 / shell2;
  const double r3 = lor3 / shell3;
  CHECK(std::abs(r2 - 1.0) < 0.1);
  CHECK(std::abs(r3 - 1.0) < 0.01);
  CHECK(std::abs(r3 - 1.0) < std::abs(r2 - 1.0));

  // The on-shell member is the closed form weight * (pi/2) k^3.
  const double k = w / p.c;
  const double gamma_w = polarizability(Polarizability::kGamma, w, p).real();
  const double weight = 2.0 * p.hbar * gamma_w * p.B0.norm() /
                        (3.0 * std::pow(std::numbers::pi, 3) * p.eps0 *
                         p.c * p.c);
  CHECK(rel(shell2, weight * 0.5 * std::numbers::pi * k * k * k) < 1e-12);

  CHECK_THROWS_AS(green_reduction_check(0.0, 1e-3, p), NonPositiveInput);
  CHECK_THROWS_AS(green_reduction_check(w, 0.0, p), NonPositiveInput);
}

TEST_CASE("explicit mode sum reproduces the spectral density") {
  const ModelParams p = make_point();
  const double coef = p.hbar / (6.0 * std::pow(std::numbers::pi, 2) *
                                p.eps0 * std::pow(p.c, 5));
  for (double w : {0.5, 3.0}) {
    const Eigen::Vector3d lhs = mode_sum_integrand(w, p);
    const Eigen::Vector3d rhs = coef * sc_integrand(w, p) * p.B0;
    CHECK((lhs - rhs).norm() < 1e-10 * rhs.norm());
  }
  CHECK_THROWS_AS(mode_sum_integrand(0.0, p), NonPositiveInput);
  CHECK_THROWS_AS(mode_sum_integrand(0.5, p, 1, 48), NonPositiveInput);
}
