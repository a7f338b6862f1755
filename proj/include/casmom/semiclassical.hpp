// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Semiclassical (linear-response) route to the vacuum momentum.
//
// The fluctuation-dissipation reduction leaves a single frequency integral:
//   P = (hbar B0 / 6 pi^2 eps0 c^5) * Re int_0^inf dw w^4 (xi/2 - gamma/w),
// whose integrand has real-axis poles of order 3 at w = w0 and order 5 at
// w = 2 w0.  "Re int" is given meaning by a retarded shift
// w0^2 -> w0^2 (1 - i eps) with Richardson extrapolation eps -> 0, and
// cross-checked by a Hadamard finite-part evaluation of the same integral;
// the two prescriptions agree to quadrature precision.
//
// In the scale-free variable u = w/w0 the whole integral reduces to a pure
// number
//   J = FP int_0^inf u^4 combo(u) du,
// and P = sc_prefactor(p) * J * B0 with
//   sc_prefactor = hbar^2 e^3 C M_xyz / (6 pi^2 c^5 eps0 w0 mu^2 mu*^2).
// The closed-form reference value corresponds to J = -1/243.

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "casmom/params.hpp"
#include "casmom/quadrature.hpp"

namespace casmom {

// Regularization and quadrature policy for the frequency integral.
struct ScQuadratureSpec {
  // Single-evaluation regularization width (used for diagnostics).
  double eps_reg = 1e-3;
  // Strictly decreasing ladder extrapolated to eps = 0.
  std::vector<double> eps_ladder = {1.0e-2, 5.0e-3, 2.5e-3, 1.25e-3,
                                    6.25e-4, 3.125e-4, 1.5625e-4, 7.8125e-5};
  double rel_tol = 1e-4;  // required agreement of successive extrapolants
  double abs_tol = 1e-12;
  AdaptiveSpec panel = {1e-10, 0.0, 20};
  // The infinite tail is mapped algebraically (u = t/(1-t)); no hard cutoff.
};

// A second, independently spaced ladder for regularization-independence
// checks.
ScQuadratureSpec sc_alternate_ladder();

// Spectral density w^4 (xi/2 - gamma/w) at real frequency; odd poles at
// w0 and 2 w0 are guarded by OnResonance.  Vanishes at w = 0 and decays as
// w^-5 at infinity.
double sc_integrand(double omega, const ModelParams &p);

// The scale-free pole-regularized integral J (see header comment), computed
// with the given eps ladder.  Throws QuadratureNotConverged when the last two
// extrapolants disagree beyond rel_tol/abs_tol.
struct ScIntegralReport {
  double value = 0.0;               // extrapolated J
  double extrapolation_error = 0.0; // |last Neville correction|
  std::vector<double> ladder_values;
};
ScIntegralReport sc_scaled_integral(const ScQuadratureSpec &spec);

// Same number via the Hadamard finite-part route (symmetric excision windows
// around u = 1 and u = 2); used as the regularization cross-check.
double sc_scaled_integral_finite_part();

// hbar^2 e^3 C M_xyz / (6 pi^2 c^5 eps0 w0 mu^2 mu*^2).
double sc_prefactor(const ModelParams &p);

// Regularized quadrature of the frequency integral: sc_prefactor * J * B0.
Eigen::Vector3d sc_momentum_numeric(const ModelParams &p,
                                    const ScQuadratureSpec &spec = {});

// Closed form: sc_prefactor * (-1/243) * B0, i.e. the coefficient
// -1/(1458 pi^2) against hbar^2 e^3 C B0 M_xyz / (c^5 eps0 w0 mu^2 mu*^2).
Eigen::Vector3d sc_momentum_closed(const ModelParams &p);

// Fluctuation-dissipation reduction spot-check for the magnetization channel.
// The field-correlation Green function contributes, after the analytic
// angular average, a radial integral  int_0^{4k} q^4 L_eps(q) dq  with the
// Lorentzian kernel L_eps = mu_w / ((k^2 - q^2)^2 + mu_w^2), mu_w = eps k^2,
// which in the on-shell limit becomes (pi/2) k^3.  Returns
//   { Lorentzian-width evaluation, on-shell limit }
// both multiplied by the physical channel weight
//   2 hbar gamma(w) |B0| / (3 pi^3 eps0 c^2),  w = c k.
// Their ratio -> 1 as eps -> 0 with O(eps) error.
std::pair<double, double> green_reduction_check(double omega, double eps,
                                                const ModelParams &p);

// Explicit mode-sum form of the same spectral density: quadrature of
// hbar * delta_n * k-hat over photon directions at fixed w (continuum
// one-particle normalisation, unit polarization weight).  Equals
// (hbar / 6 pi^2 eps0 c^5) * sc_integrand(w) * B0 up to the angular-grid
// error; the identity test lives in the unit tests.
Eigen::Vector3d mode_sum_integrand(double omega, const ModelParams &p,
                                   int n_polar = 24, int n_azimuth = 48);

} // namespace casmom
