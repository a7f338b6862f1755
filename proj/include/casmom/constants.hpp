// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Physical constants and the internal unit system.
//
// All library computations use "electron atomic-relativistic" internal units:
//   hbar = c = m_e = 1  and  epsilon_0 = 1,
// so the elementary charge is e = sqrt(4 pi alpha_fs).  Lengths are then
// reduced Compton wavelengths, energies are electron rest energies, magnetic
// fields are in units of m_e^2 c^2 / (e hbar) scaled by the charge convention
// below, and so on.  The scale factors here convert between SI and internal
// values; params.hpp uses them for the unit round-trip.

#pragma once

namespace casmom {

// Fine-structure constant (CODATA 2018, exact to the digits given).
inline constexpr double kAlphaFS = 7.2973525693e-3;

// Elementary charge in internal units, e = sqrt(4 pi alpha_fs).
double elementary_charge();

// CODATA 2018 SI reference values used only for unit conversion.
inline constexpr double kElectronMassSI = 9.1093837015e-31; // kg
inline constexpr double kSpeedOfLightSI = 2.99792458e8;     // m/s (exact)
inline constexpr double kHbarSI = 1.054571817e-34;          // J s
inline constexpr double kEps0SI = 8.8541878128e-12;         // F/m
inline constexpr double kElementaryChargeSI = 1.602176634e-19; // C (exact)

// One internal unit of each quantity, expressed in SI.
//
// Derivation: with hbar = c = m_e = 1 the length unit is the reduced Compton
// wavelength  lC = hbar/(m_e c),  the time unit is lC/c, the energy unit is
// m_e c^2 and the momentum unit is m_e c.  Charge is fixed by epsilon_0 = 1
// together with the SI value of alpha_fs = e_SI^2/(4 pi eps0_SI hbar c):
// one internal charge unit is  e_SI / sqrt(4 pi alpha_fs).  The magnetic-field
// unit follows from requiring e*B (internal) == force scale:  B_unit =
// (momentum unit)/(charge unit * length unit).  The chiral coupling C
// multiplies x*y*z, so its unit is energy/length^3.
struct UnitScales {
  double mass;           // kg
  double length;         // m
  double time;           // s
  double frequency;      // rad/s
  double energy;         // J
  double momentum;       // kg m/s
  double charge;         // C
  double bfield;         // T
  double chiral_coupling; // J/m^3
};

UnitScales unit_scales();

} // namespace casmom
