// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Energy bookkeeping for adiabatic switching of the magnetic field.
//
// When the field is ramped from 0 to B0 the molecule acquires a vacuum-induced
// momentum P_cas(B) (linear in B), and its kinetic momentum changes from Q0 to
// Q0 - P_cas(B0).  The work done by the external source against the magnetic
// Lamb energies along the ramp must equal the kinetic-energy change
//
//     Delta_E_kin = (Q0 - P_cas)^2 / 2M - Q0^2 / 2M,
//
// an identity this module verifies by an explicit line integral.  Throughout,
// P_cas denotes the orientation-averaged transverse plus longitudinal vacuum
// momentum (the same decomposition the Lamb energies are built from), and the
// ramp scales the field magnitude linearly along the direction of p.B0 (z-hat
// when p.B0 = 0).

#pragma once

#include <Eigen/Dense>

#include "casmom/params.hpp"

namespace casmom {

// All entries in internal units, evaluated at the final field magnitude.
struct EnergyLedger {
  double E_lamb_par = 0.0;   // longitudinal magnetic Lamb energy at (B0, Q0)
  double E_lamb_perp = 0.0;  // transverse magnetic Lamb energy at (B0, Q0)
  double W_B0 = 0.0;         // switching work, numeric line integral
  double Delta_E_kin = 0.0;  // exact kinetic-energy change
  double E_diamag = 0.0;     // diamagnetic magnetization work -alpha_M(0) B0^2
};

// Vacuum momentum used consistently by every identity in this module:
// orientation-averaged transverse + longitudinal contributions at field
// magnitude B along the ramp direction.
Eigen::Vector3d energy_p_cas(double B, const ModelParams &p);

// Longitudinal magnetic Lamb energy -P_par(B) . Q / M.  With
// fixed_orientation the body-frame (non-averaged) longitudinal momentum is
// used instead of the orientation average.
double lamb_parallel(double B, const Eigen::Vector3d &Q, const ModelParams &p,
                     bool fixed_orientation = false);

// Transverse magnetic Lamb energy -P_perp(B) . Q / M (orientation-averaged).
double lamb_perp(double B, const Eigen::Vector3d &Q, const ModelParams &p);

// Work done along the linear ramp 0 -> B0_final,
//
//     W = int_0^{B0} dB (E_lamb_par + E_lamb_perp) / B,
//
// with the instantaneous kinetic momentum Q(B) = Q0 - P_cas(B) substituted at
// each step.  Trapezoid rule with n_steps panels (the integrand is linear in
// B, so the rule is exact up to rounding); the B = 0 endpoint is evaluated by
// the finite limit P_cas(dB)/dB.  Throws NonPositiveInput if n_steps < 2.
double magnetization_work(double B0_final, const Eigen::Vector3d &Q0,
                          const ModelParams &p, int n_steps);

// Exact kinetic-energy change (Q0 - P_cas(B0))^2/2M - Q0^2/2M.
double delta_e_kin(double B0_final, const Eigen::Vector3d &Q0,
                   const ModelParams &p);

// Magnetization energy of the diamagnetic molecule without the vacuum field,
// -alpha_M(0) B0^2 with the static magnetic polarizability from the response
// module.  Vanishes for an isotropic oscillator.
double diamagnetic_work(double B0_final, const ModelParams &p);

// Vacuum magnetization correction.  The shortcut form is
// -(E_lamb_par + E_lamb_perp)/B; the strict functional form is
// -dE/dB + (B/2) d^2E/dB^2 evaluated by central differences.  For the
// quadratic-in-B energies at hand the two agree identically, which
// strict = true lets callers verify.
double magnetization_correction(double B0_final, const Eigen::Vector3d &Q0,
                                const ModelParams &p, bool strict = false);

// Assembles the full ledger at (B0_final, Q0).
EnergyLedger energy_ledger(double B0_final, const Eigen::Vector3d &Q0,
                           const ModelParams &p, int n_steps = 10000);

} // namespace casmom
