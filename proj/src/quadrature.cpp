// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casmom/errors.hpp"

namespace casmom {

namespace {

namespace bq = boost::math::quadrature;

template <int N>
void append_panel(double a, double b, PanelNodes *out) {
  // boost tabulates only the non-negative half of the symmetric rule.
  const auto &xs = bq::gauss<double, N>::abscissa();
  const auto &ws = bq::gauss<double, N>::weights();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0.0) {
      out->x.push_back(mid);
      out->w.push_back(ws[i] * half);
    } else {
      out->x.push_back(mid - half * xs[i]);
      out->w.push_back(ws[i] * half);
      out->x.push_back(mid + half * xs[i]);
      out->w.push_back(ws[i] * half);
    }
  }
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b,
                 const AdaptiveSpec &spec) {
  double err = 0.0, l1 = 0.0;
  const double val = bq::gauss_kronrod<double, 15>::integrate(
      f, a, b, spec.max_depth, spec.rel_tol, &err, &l1);
  // The refinement targets the panel's L1 norm, so judge the absolute error
  // estimate against that same scale; |val| alone would reject panels whose
  // integrand changes sign internally.  The deep-recursion error estimate
  // accumulates pessimistically (each sub-panel contributes its own floor),
  // so only reject results that are worse than 1e-7 relative -- tighter
  // requests that land between their target and that floor are still
  // accurate, merely conservatively reported.
  const double scale = std::max({std::abs(val), l1, spec.abs_tol});
  const double worst = std::max(10.0 * spec.rel_tol, 1e-7);
  if (err > worst * scale && err > spec.abs_tol)
    throw QuadratureNotConverged(
        "Gauss-Kronrod error estimate " + std::to_string(err) +
        " for integral value " + std::to_string(val) + " on [" +
        std::to_string(a) + ", " + std::to_string(b) + "]");
  return val;
}

PanelNodes panel_nodes(const std::vector<double> &edges, int points_per_panel) {
  if (edges.size() < 2)
    throw NonPositiveInput("panel_nodes needs at least two edges");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!(edges[i] > edges[i - 1]))
      throw NonPositiveInput("panel edges must be strictly increasing");

  PanelNodes out;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double a = edges[i - 1], b = edges[i];
    switch (points_per_panel) {
    case 20:
      append_panel<20>(a, b, &out);
      break;
    case 24:
      append_panel<24>(a, b, &out);
      break;
    case 30:
      append_panel<30>(a, b, &out);
      break;
    case 40:
      append_panel<40>(a, b, &out);
      break;
    default:
      throw NonPositiveInput("unsupported per-panel order " +
                             std::to_string(points_per_panel) +
                             " (use 20, 24, 30 or 40)");
    }
  }
  return out;
}

double extrapolate_to_zero(const std::vector<double> &eps,
                           const std::vector<double> &val,
                           double *err_estimate) {
  const std::size_t n = eps.size();
  if (n == 0 || val.size() != n)
    throw NonPositiveInput("extrapolate_to_zero needs matching nonempty "
                           "eps/value sequences");
  std::vector<double> t = val;
  double prev = t[0];
  // Neville tableau evaluated at eps = 0.
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double xi = eps[i], xim = eps[i + m];
      if (xi == xim)
        throw NonPositiveInput("duplicate eps value in extrapolation ladder");
      t[i] = ((0.0 - xim) * t[i] - (0.0 - xi) * t[i + 1]) / (xi - xim);
    }
    prev = (m + 1 < n) ? t[0] : prev;
  }
  if (err_estimate)
    *err_estimate = std::abs(t[0] - prev);
  return t[0];
}

double finite_part_window(const std::function<double(double)> &f, double c,
                          int pole_order, const FinitePartSpec &spec) {
  const int m = pole_order;
  if (m < 1 || m % 2 == 0)
    throw NonPositiveInput("finite_part_window handles odd pole orders, got " +
                           std::to_string(m));
  const double W = spec.window, x0 = spec.excision, r = spec.fit_radius;
  if (!(0.0 < x0 && x0 < W) || !(r > 0.0))
    throw NonPositiveInput("finite-part window geometry invalid");

  // --- Taylor coefficients of g(u) = f(u) (u-c)^m by Chebyshev-point fit ---
  // Use an even point count: an odd count puts a first-kind Chebyshev node
  // at t = cos(pi/2), which rounds onto the pole itself.
  int npts = spec.fit_degree + 1;
  if (npts % 2 != 0)
    ++npts;
  Eigen::MatrixXd V(npts, npts);
  Eigen::VectorXd gv(npts);
  for (int i = 0; i < npts; ++i) {
    // Chebyshev points of the first kind in [-1, 1], scaled by r.
    const double t = std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * npts));
    const double u = c + r * t;
    gv[i] = f(u) * std::pow(u - c, m);
    double tp = 1.0;
    for (int j = 0; j < npts; ++j) {
      V(i, j) = tp;
      tp *= t;
    }
  }
  // Monomial coefficients in the scaled variable t = (u-c)/r.
  const Eigen::VectorXd b = V.colPivHouseholderQr().solve(gv);
  const int need = m + 5; // g_0 .. g_{m+4}
  if (npts < need)
    throw NonPositiveInput("finite-part fit degree too low for pole order " +
                           std::to_string(m));
  std::vector<double> g(need);
  for (int j = 0; j < need; ++j)
    g[j] = b[j] / std::pow(r, j);

  // --- regular part f - S on the window, excised around the pole ---
  auto f_reg = [&](double u) {
    const double dx = u - c;
    double S = 0.0;
    for (int j = 0; j < m; ++j)
      S += g[j] * std::pow(dx, j - m);
    return f(u) - S;
  };
  const double outer = integrate(f_reg, c - W, c - x0, spec.quad) +
                       integrate(f_reg, c + x0, c + W, spec.quad);

  // Inner excision by the even Taylor series of f - S:
  //   int_{-x0}^{x0} (f - S) = 2 sum_l g_{m+2l} x0^{2l+1} / (2l+1).
  double inner = 0.0;
  double x0_pow = x0;
  for (int l = 0; l <= 2; ++l) {
    inner += 2.0 * g[m + 2 * l] * x0_pow / (2.0 * l + 1.0);
    x0_pow *= x0 * x0;
  }

  // Finite part of the singular sum S over the symmetric window: only even
  // inverse powers q = m - j contribute, each -2 g_j / ((q-1) W^{q-1}).
  double fp_singular = 0.0;
  for (int j = 0; j < m; ++j) {
    const int q = m - j;
    if (q % 2 == 0)
      fp_singular -= 2.0 * g[j] / ((q - 1.0) * std::pow(W, q - 1));
  }

  return outer + inner + fp_singular;
}

} // namespace casmom
