// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Quadrature utilities shared by the momentum pipelines:
//   * adaptive Gauss-Kronrod integration (finite or semi-infinite ranges),
//   * fixed Gauss-Legendre nodes over user-chosen panel edges,
//   * Neville polynomial extrapolation of a parameter ladder to zero,
//   * a Hadamard finite-part evaluator for symmetric windows around an
//     interior pole of odd order.
// These are thin layers over Boost.Math quadrature plus the finite-part
// bookkeeping, which is the only nontrivial numerics owned by this file.

#pragma once

#include <functional>
#include <vector>

namespace casmom {

struct AdaptiveSpec {
  double rel_tol = 1e-10;
  double abs_tol = 0.0; // absolute floor below which the estimate may stop
  int max_depth = 18;   // Gauss-Kronrod bisection depth
};

// Integrates f over [a, b]; b may be +infinity.  Throws
// QuadratureNotConverged when the error estimate exceeds the tolerances.
double integrate(const std::function<double(double)> &f, double a, double b,
                 const AdaptiveSpec &spec = {});

// Gauss-Legendre nodes and weights tiled over consecutive panels
// [edges[0], edges[1]], [edges[1], edges[2]], ...  Edges must be strictly
// increasing.  Supported per-panel orders: 20, 24, 30, 40.
struct PanelNodes {
  std::vector<double> x, w;
};
PanelNodes panel_nodes(const std::vector<double> &edges, int points_per_panel);

// Neville polynomial extrapolation of samples (eps[i], val[i]) to eps = 0.
// The distinct eps values need not be sorted.  If err_estimate is non-null it
// receives the magnitude of the final extrapolation correction.
double extrapolate_to_zero(const std::vector<double> &eps,
                           const std::vector<double> &val,
                           double *err_estimate = nullptr);

// Hadamard finite part of  int_{c-W}^{c+W} f(u) du  where f has a pole of odd
// order m at u = c, i.e. f(u) = g(u)/(u-c)^m with g analytic.
//
// Derivation.  Write the Laurent expansion f = sum_j g_j (u-c)^{j-m} with
// g_j the Taylor coefficients of g at c.  Split f = S + (f - S) with
// S = sum_{j<m} g_j (u-c)^{j-m} the full singular principal part:
//   * f - S is analytic on the window; it is integrated by Gauss-Kronrod on
//     [c-W, c-x0] and [c+x0, c+W], and on the inner excision [-x0, x0] by its
//     even Taylor series 2 sum_l g_{m+2l} x0^{2l+1}/(2l+1) (odd terms cancel
//     by symmetry).  The excision avoids the catastrophic cancellation of
//     evaluating f - S where f ~ 1/x^m is huge.
//   * The finite part of int S is elementary on a symmetric window: odd
//     inverse powers integrate to zero (principal value), and for q = m - j
//     even the divergent boundary term is discarded, leaving
//     FP int (u-c)^{-q} du = -2 / ((q-1) W^{q-1}).
// The Taylor coefficients g_j (j <= m+4) come from a degree-(2q_fit)
// polynomial fit of g(u) = f(u) (u-c)^m sampled at Chebyshev points within
// |u-c| <= r_fit; g is analytic there as long as r_fit stays below the
// distance to the next pole.
struct FinitePartSpec {
  double window = 0.3;       // half-width W of the excision window
  double excision = 0.0375;  // inner half-width x0 (default W/8)
  double fit_radius = 0.15;  // Chebyshev sampling radius for g
  int fit_degree = 12;       // polynomial degree of the g fit
  AdaptiveSpec quad = {};
};

double finite_part_window(const std::function<double(double)> &f, double c,
                          int pole_order, const FinitePartSpec &spec = {});

} // namespace casmom
