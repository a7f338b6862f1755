// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Adaptive integration, fixed panel rules, ladder extrapolation and the
// Hadamard finite-part evaluator.  Finite-part references were computed with
// 40-digit arithmetic from the Laurent-series definition, independently of
// the library code.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "casmom/errors.hpp"
#include "casmom/quadrature.hpp"

using namespace casmom;

namespace {

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

TEST_CASE("adaptive integration reproduces elementary integrals") {
  CHECK(rel(integrate([](double x) { return x * x; }, 0.0, 1.0), 1.0 / 3.0) <
        1e-13);
  CHECK(rel(integrate([](double x) { return std::exp(-x); }, 0.0, kInf), 1.0) <
        1e-12);
  CHECK(rel(integrate([](double x) { return x * x * std::exp(-x); }, 0.0,
                      kInf),
            2.0) < 1e-12);
  // 1/(1+x)^2 has the same x^-2 tail the photon integrals compactify.
  CHECK(rel(integrate([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); },
                      0.0, kInf),
            1.0) < 1e-12);
}

TEST_CASE("sign-cancelling integrands are judged on the L1 scale") {
  // int_0^{2pi} sin = 0: the error estimate must be compared against the
  // panel's L1 norm (= 4), not against the vanishing value.
  const double v =
      integrate([](double x) { return std::sin(x); }, 0.0, 2.0 * M_PI);
  CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("a divergent integrand raises the convergence category") {
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0),
                  QuadratureNotConverged);
  try {
    integrate([](double x) { return 1.0 / x; }, 0.0, 1.0);
  } catch (const Error &e) {
    CHECK(e.category() == ErrorCategory::kConvergence);
    CHECK(exit_code(e.category()) == 3);
  }
}

TEST_CASE("panel nodes integrate exactly across panel boundaries") {
  const std::vector<double> edges = {0.0, 1.0, 2.0, 5.0};
  for (int order : {20, 24, 30, 40}) {
    const PanelNodes n = panel_nodes(edges, order);
    REQUIRE(n.x.size() == n.w.size());
    CHECK(static_cast<int>(n.x.size()) == 3 * order);

    double wsum = 0.0, ival = 0.0;
    for (std::size_t i = 0; i < n.x.size(); ++i) {
      wsum += n.w[i];
      ival += n.w[i] * std::exp(-n.x[i]);
    }
    CHECK(rel(wsum, 5.0) < 1e-14);                      // total width
    CHECK(rel(ival, 1.0 - std::exp(-5.0)) < 1e-14);     // int_0^5 e^-x
  }

  CHECK_THROWS_AS(panel_nodes(edges, 25), NonPositiveInput);
  CHECK_THROWS_AS(panel_nodes({1.0}, 20), NonPositiveInput);
  CHECK_THROWS_AS(panel_nodes({0.0, 2.0, 1.0}, 20), NonPositiveInput);
}

TEST_CASE("ladder extrapolation is exact for polynomial ladders") {
  // f(eps) = 3 - 2 eps + 5 eps^2: three samples determine it exactly.
  const std::vector<double> eps = {1e-2, 5e-3, 2.5e-3};
  std::vector<double> val;
  for (double e : eps)
    val.push_back(3.0 - 2.0 * e + 5.0 * e * e);
  double err = 0.0;
  CHECK(rel(extrapolate_to_zero(eps, val, &err), 3.0) < 1e-13);
  // The reported error is the shift of the top tableau entry when the last
  // rung is added, |P_012 - P_01|; for this quadratic ladder that is the
  // unresolved curvature of the two-point fit, 5 eps_0 eps_1 = 2.5e-4.
  CHECK(rel(err, 2.5e-4) < 1e-6);

  CHECK_THROWS_AS(extrapolate_to_zero({}, {}), NonPositiveInput);
  CHECK_THROWS_AS(extrapolate_to_zero({1e-2, 1e-2}, {1.0, 2.0}),
                  NonPositiveInput);
}

TEST_CASE("finite part of known odd-order poles") {
  // FP int_{-0.3}^{0.3} e^u/u^3 du (order-3 pole at 0).
  const double fp3 = finite_part_window(
      [](double u) { return std::exp(u) / (u * u * u); }, 0.0, 3);
  CHECK(rel(fp3, -6.5665164736372201) < 1e-9);

  // FP int_{0.7}^{1.3} cos(u)/(u-1)^5 du (order-5 pole at 1).  Subtracting
  // the order-5 principal part leaves ~1e-7 absolute cancellation noise near
  // the excision edge, so the flank quadrature needs an absolute floor and a
  // shallow depth; the value itself is still good to ~1e-11 relative.
  FinitePartSpec s5;
  s5.quad = AdaptiveSpec{1e-7, 1e-5, 6};
  const double fp5 = finite_part_window(
      [](double u) { return std::cos(u) / std::pow(u - 1.0, 5); }, 1.0, 5, s5);
  CHECK(rel(fp5, 19.837889240460587) < 1e-9);

  // A pure singular part has vanishing finite part on a symmetric window.
  // The subtracted integrand is pure fit roundoff (~1e-10), so again an
  // absolute floor keeps the flank quadrature from chasing noise.
  FinitePartSpec s0;
  s0.quad.abs_tol = 1e-8;
  const double fp0 = finite_part_window(
      [](double u) { return 1.0 / std::pow(u - 2.0, 3); }, 2.0, 3, s0);
  CHECK(std::abs(fp0) < 1e-10);
}

TEST_CASE("finite part is additive across a window split") {
  // FP over W = 0.3 equals FP over W = 0.25 plus the two regular shells.
  // Same noise-floor quadrature policy as above for the order-5 pole.
  auto f = [](double u) { return std::cos(u) / std::pow(u - 1.0, 5); };
  FinitePartSpec outer;
  outer.quad = AdaptiveSpec{1e-7, 1e-5, 6};
  FinitePartSpec inner = outer;
  inner.window = 0.25;
  inner.excision = 0.25 / 8.0;
  const double fp_inner = finite_part_window(f, 1.0, 5, inner);
  CHECK(rel(fp_inner, 34.77729631453559) < 1e-9);

  const double shells =
      integrate(f, 0.70, 0.75) + integrate(f, 1.25, 1.30);
  const double fp_outer = finite_part_window(f, 1.0, 5, outer);
  CHECK(rel(fp_inner + shells, fp_outer) < 1e-9);
}

TEST_CASE("finite-part sampling never lands on the pole") {
  // An odd Chebyshev point count would place a node at the pole itself;
  // the evaluator pads to an even count, so odd fit degrees stay finite.
  for (int degree : {9, 10, 11, 12}) {
    FinitePartSpec s;
    s.fit_degree = degree;
    const double v = finite_part_window(
        [](double u) { return std::exp(u) / (u * u * u); }, 0.0, 3, s);
    CHECK(std::isfinite(v));
    CHECK(rel(v, -6.5665164736372201) < 1e-8);
  }
}

TEST_CASE("finite-part input validation") {
  auto f = [](double u) { return 1.0 / u; };
  CHECK_THROWS_AS(finite_part_window(f, 0.0, 2), NonPositiveInput); // even
  CHECK_THROWS_AS(finite_part_window(f, 0.0, -3), NonPositiveInput);
  FinitePartSpec bad;
  bad.excision = 0.5; // larger than the window
  CHECK_THROWS_AS(finite_part_window(f, 0.0, 3, bad), NonPositiveInput);
}
