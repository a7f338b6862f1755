// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casmom/constants.hpp"
#include "casmom/errors.hpp"

namespace casmom {

double elementary_charge() {
  return std::sqrt(4.0 * std::numbers::pi * kAlphaFS);
}

UnitScales unit_scales() {
  UnitScales s;
  s.mass = kElectronMassSI;
  s.length = kHbarSI / (kElectronMassSI * kSpeedOfLightSI);
  s.time = s.length / kSpeedOfLightSI;
  s.frequency = 1.0 / s.time;
  s.energy = kElectronMassSI * kSpeedOfLightSI * kSpeedOfLightSI;
  s.momentum = kElectronMassSI * kSpeedOfLightSI;
  s.charge = kElementaryChargeSI / elementary_charge();
  s.bfield = s.momentum / (s.charge * s.length);
  s.chiral_coupling = s.energy / (s.length * s.length * s.length);
  return s;
}

double ModelParams::omega(int axis) const {
  switch (axis) {
  case 0:
    return omega_x;
  case 1:
    return omega_y;
  case 2:
    return omega_z;
  default:
    throw NonPositiveInput("axis index must be 0, 1 or 2, got " +
                           std::to_string(axis));
  }
}

ModelParams derive_params(const RawParams &raw) {
  // Normalise to internal units first.
  double m_N = raw.m_N;
  double C = raw.C;
  double wx = raw.omega_x, wy = raw.omega_y, wz = raw.omega_z;
  Eigen::Vector3d B0 = raw.B0;
  Eigen::Vector3d Q0 = raw.Q0;

  if (raw.units == RawParams::Units::kSI) {
    const UnitScales s = unit_scales();
    m_N /= s.mass;
    C /= s.chiral_coupling;
    wx /= s.frequency;
    wy /= s.frequency;
    wz /= s.frequency;
    B0 /= s.bfield;
    Q0 /= s.momentum;
  }

  if (!(m_N > 0.0))
    throw NonPositiveInput("nucleus mass m_N = " + std::to_string(m_N));
  if (!(wx > 0.0) || !(wy > 0.0) || !(wz > 0.0))
    throw NonPositiveInput("trap frequencies must be positive");
  if (m_N == 1.0)
    throw DegenerateMasses(
        "m_N == m_e makes the mass-asymmetric reduced mass undefined; "
        "probe the equal-mass limit with m_N = (1 + delta) m_e instead");

  ModelParams p;
  p.m_e = 1.0;
  p.m_N = m_N;
  p.C = C;
  p.omega_x = wx;
  p.omega_y = wy;
  p.omega_z = wz;
  p.B0 = B0;
  p.Q0 = Q0;
  p.e = elementary_charge();

  p.M = p.m_N + p.m_e;
  p.mu = p.m_N * p.m_e / p.M;
  p.mu_star = p.m_N * p.m_e / (p.m_N - p.m_e);

  p.omega_sum = wx + wy + wz;
  p.omega_0 = p.omega_sum / 3.0;
  return p;
}

RawParams to_si(const ModelParams &p) {
  const UnitScales s = unit_scales();
  RawParams raw;
  raw.units = RawParams::Units::kSI;
  raw.m_N = p.m_N * s.mass;
  raw.C = p.C * s.chiral_coupling;
  raw.omega_x = p.omega_x * s.frequency;
  raw.omega_y = p.omega_y * s.frequency;
  raw.omega_z = p.omega_z * s.frequency;
  raw.B0 = p.B0 * s.bfield;
  raw.Q0 = p.Q0 * s.momentum;
  return raw;
}

AnisotropySet anisotropy(const ModelParams &p) {
  AnisotropySet a;
  const double w[3] = {p.omega_x, p.omega_y, p.omega_z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a.eta[i][j] = (w[i] - w[j]) / (w[i] + w[j]);

  const double wprod = w[0] * w[1] * w[2];
  a.curlyC = p.C * std::sqrt(p.hbar) /
             (std::pow(2.0 * p.mu, 1.5) * p.omega_sum * std::sqrt(wprod));

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    a.curlyB0[i] = p.e * p.B0[i] / (4.0 * p.mu_star * std::sqrt(w[j] * w[k]));
  }

  // eta indices: [2][1] = (z,y), [1][0] = (y,x), [0][2] = (x,z).
  a.M_xyz = a.eta[2][1] * a.eta[1][0] * a.eta[0][2];
  a.N_xyz = a.eta[1][0] * a.eta[1][2] + a.eta[2][0] * a.eta[2][1] +
            a.eta[0][1] * a.eta[0][2];
  return a;
}

double max_eta(const AnisotropySet &a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m = std::max(m, std::abs(a.eta[i][j]));
  return m;
}

} // namespace casmom
