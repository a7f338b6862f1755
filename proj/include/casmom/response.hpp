// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Frequency-domain response of the dressed chiral oscillator.
//
// Seven scalar response functions enter the induced electric dipole of a
// molecule with chiral coupling C in a static field B0, probed by a plane
// wave (E, B) with wavevector k and frequency w (isotropic-limit forms,
// w0 = mean trap frequency, N = N_xyz and M = M_xyz from anisotropy()):
//
//   alpha_E = e^2 / (mu (w0^2 - w^2))                    electric polarizability
//   alpha_M = 4 e^2 hbar w0 N / (9 mu*^2 (4 w0^2 - w^2)) magnetic polarizability
//   chi     = e^3 / (mu mu* (w0^2 - w^2)^2)              magneto-electric
//   zeta    = e^3 hbar w0 (4 w0^2 - 3 w^2) N
//             / (18 mu*^3 w (4 w0^2 - w^2)^2)            magneto-magnetic
//   beta    = -2 e^2 hbar C w0^3 (w^4 + 7 w0^2 w^2 + 4 w0^4) M
//             / (mu^2 mu* D^3)                           rotatory (chiral)
//   gamma   = e^3 hbar C w0^3 w^2 (w^2 + 12 w0^2) M
//             / (mu^2 mu*^2 D^3)                         magneto-chiral
//   xi      = -2 e^3 hbar C M w0^3 w (19 w^6 - 842 w^4 w0^2 - 224 w^2 w0^4
//             - 672 w0^6) / (15 mu^2 mu*^2 (w^2-w0^2)^3 (w^2-4w0^2)^5)
//                                                        magneto-chiral (k-odd)
// with D = (w^2 - w0^2)(w^2 - 4 w0^2).
//
// The dipole they generate, for fields with convention
// E(t) ~ E e^{-iwt}, B = (k x E)/w on shell, is
//   d = alpha_E E - i w chi B0 x E + i beta k x E
//       + (xi/2 - gamma/w)(B0.k) E + (xi/2 + gamma/w)(B0.E) k .
// The combination  alpha_nr = (xi/2 - gamma/w)(B0.k)  is the non-reciprocal
// (magneto-chiral) part: it survives angular averaging and gives the
// direction-dependent refractive-index shift delta_n = rho alpha_nr / eps0.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "casmom/params.hpp"

namespace casmom {

enum class Polarizability { kE, kM, kChi, kZeta, kBeta, kGamma, kXi };

// Scalar response at real frequency w >= 0.  Values are real off resonance;
// the complex return type keeps one signature for the analytically continued
// internals.  Throws OnResonance within relative 1e-9 of a pole of the
// requested kind (w0 for kE/kChi; 2w0 for kM/kZeta; both for kBeta, kGamma,
// kXi; w = 0 for kZeta).
std::complex<double> polarizability(Polarizability kind, double omega,
                                    const ModelParams &p);

// All scalars plus the constitutive tensors at (k, w):
//   alpha_EE = [alpha_E + (xi/2)(B0.k)] I + (xi/2) k B0^T - i w chi [B0x]
//   alpha_EM = i w beta I + gamma [B0x]            (alpha_ME = -alpha_EM)
// where [B0x] is the skew matrix with [B0x] v = B0 x v.
struct ResponseSet {
  std::complex<double> alpha_E, alpha_M, chi, zeta, beta, gamma, xi;
  Eigen::Matrix3cd alpha_EE;
  Eigen::Matrix3cd alpha_EM;
  double alpha_nr = 0.0;
};

ResponseSet response_at(const Eigen::Vector3d &k, double omega,
                        const ModelParams &p);

// Induced dipole from the constitutive tensors, d = alpha_EE E + alpha_EM B,
// with caller-supplied magnetic amplitude.
Eigen::Vector3cd induced_dipole(const Eigen::Vector3cd &E_free,
                                const Eigen::Vector3cd &B_free,
                                const Eigen::Vector3d &k, double omega,
                                const ModelParams &p);

// On-shell overload: B = (k x E)/w is substituted, which reduces the tensor
// form to the explicit dipole expansion quoted above.  Requires |k| c = w
// within relative 1e-9 (OffShell otherwise).
Eigen::Vector3cd induced_dipole(const Eigen::Vector3cd &E_free,
                                const Eigen::Vector3d &k, double omega,
                                const ModelParams &p);

// Non-reciprocal response (xi/2 - gamma/w)(B0.k); real by construction.
double alpha_nr(const Eigen::Vector3d &k, double omega, const ModelParams &p);

// Magneto-chiral refractive-index shift rho * alpha_nr / eps0 for number
// density rho.
double delta_n_mch(double rho, const Eigen::Vector3d &k, double omega,
                   const ModelParams &p);

namespace detail {

// (xi/2 - gamma/w) in the scale-free variable u = w/w0, multiplied by
// w0^6 mu^2 mu*^2 / (e^3 hbar C M_xyz): used by the pole-regularised
// frequency quadrature.  eps shifts w0^2 -> w0^2 (1 - i eps).
std::complex<double> nonreciprocal_combo_scaled(double u, double eps);

// The same combination divided by u, as a rational function of x = u^2
// continued to complex x (combo(u) = u * f(u^2)).  In the x variable both
// regularised poles are simple downward shifts, x = 1 - i eps and
// x = 4 - 4 i eps, so the function is analytic for Im x >= 0; the pole
// quadrature exploits this by deforming its contour upward.
std::complex<double> nonreciprocal_combo_x(std::complex<double> x,
                                           double eps);

} // namespace detail

} // namespace casmom
