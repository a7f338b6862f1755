// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Model parameters for the two-particle chiral oscillator in a magnetic field.
//
// The system is an electron (charge -e, mass m_e) bound to a nucleus
// (charge +e, mass m_N) by an anisotropic harmonic potential
//   V_HO = (mu/2) (wx^2 x^2 + wy^2 y^2 + wz^2 z^2)
// plus a chiral cubic term  V_C = C x y z,  placed in a uniform magnetic
// field B0.  r is the relative coordinate and the combined masses are
//   M  = m_N + m_e              (total mass)
//   mu = m_N m_e / M            (reduced mass)
//   mu* = m_N m_e / (m_N - m_e) (mass-asymmetric reduced mass)
// Q0 is the conserved pseudo-momentum of the centre of mass.

#pragma once

#include <Eigen/Dense>

namespace casmom {

// User-facing inputs, either in internal units (hbar = c = m_e = eps0 = 1)
// or in SI; derive_params() normalises to internal units.
struct RawParams {
  enum class Units { kInternal, kSI };
  Units units = Units::kInternal;

  double m_N = 1836.0;   // nucleus mass (internal: multiples of m_e; SI: kg)
  double C = 0.0;        // chiral coupling (energy / length^3)
  double omega_x = 1.0;  // trap frequencies (rad per time unit)
  double omega_y = 1.0;
  double omega_z = 1.0;
  Eigen::Vector3d B0 = Eigen::Vector3d::Zero(); // magnetic field
  Eigen::Vector3d Q0 = Eigen::Vector3d::Zero(); // centre-of-mass pseudo-momentum
};

// Fully derived parameter set in internal units.  This is the object every
// other module consumes.
struct ModelParams {
  // inputs (internal units)
  double m_e = 1.0;
  double m_N = 1836.0;
  double C = 0.0;
  double omega_x = 1.0, omega_y = 1.0, omega_z = 1.0;
  Eigen::Vector3d B0 = Eigen::Vector3d::Zero();
  Eigen::Vector3d Q0 = Eigen::Vector3d::Zero();

  // unit-system constants (all 1 internally; kept explicit for readability)
  double hbar = 1.0;
  double c = 1.0;
  double eps0 = 1.0;
  double e = 0.0; // sqrt(4 pi alpha_fs)

  // derived masses
  double M = 0.0;       // m_N + m_e
  double mu = 0.0;      // m_N m_e / M
  double mu_star = 0.0; // m_N m_e / (m_N - m_e)

  // derived frequency scales.  omega_0 is the arithmetic mean of the trap
  // frequencies; omega_sum their sum (= 3 omega_0).  Isotropic closed forms
  // use omega_0; the zero-point energy is hbar*omega_sum/2.
  double omega_0 = 0.0;
  double omega_sum = 0.0;

  double omega(int axis) const; // axis in {0,1,2}
};

// Validates raw inputs and derives all dependent quantities.  SI inputs are
// converted to internal units first.
//
// Throws NonPositiveInput for non-positive masses or frequencies and
// DegenerateMasses when m_N == m_e exactly.
ModelParams derive_params(const RawParams &raw);

// Converts a derived parameter set back to SI raw inputs (unit round-trip).
RawParams to_si(const ModelParams &p);

// Dimensionless combinations controlling every closed-form result.
//
//   eta[i][j]   = (w_i - w_j)/(w_i + w_j)          (pairwise anisotropy)
//   curlyB0[i]  = e B0_i / (4 mu* sqrt(w_j w_k))   ((i,j,k) cyclic)
//   curlyC      = C sqrt(hbar) / ((2 mu)^{3/2} (wx+wy+wz) sqrt(wx wy wz))
//   M_xyz       = eta[z][y] * eta[y][x] * eta[x][z]
//   N_xyz       = eta[y][x]*eta[y][z] + eta[z][x]*eta[z][y] + eta[x][y]*eta[x][z]
//
// M_xyz is totally antisymmetric under axis exchange and vanishes whenever two
// frequencies coincide; it carries the chiral-anisotropy selection rule.
struct AnisotropySet {
  double eta[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double curlyC = 0.0;
  double curlyB0[3] = {0, 0, 0};
  double M_xyz = 0.0;
  double N_xyz = 0.0;
};

AnisotropySet anisotropy(const ModelParams &p);

// Largest |eta[i][j]|, a convenient smallness parameter for near-isotropy.
double max_eta(const AnisotropySet &a);

} // namespace casmom
