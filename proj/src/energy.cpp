// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/energy.hpp"

#include <cmath>
#include <string>

#include "casmom/errors.hpp"
#include "casmom/qed.hpp"
#include "casmom/response.hpp"

namespace casmom {

namespace {

Eigen::Vector3d ramp_direction(const ModelParams &p) {
  return p.B0.isZero() ? Eigen::Vector3d::UnitZ()
                       : Eigen::Vector3d(p.B0.normalized());
}

ModelParams at_field(double B, const ModelParams &p) {
  ModelParams q = p;
  q.B0 = B * ramp_direction(p);
  return q;
}

} // namespace

Eigen::Vector3d energy_p_cas(double B, const ModelParams &p) {
  const ModelParams q = at_field(B, p);
  return p_perp_rot(q) + p_par_rot(q);
}

double lamb_parallel(double B, const Eigen::Vector3d &Q, const ModelParams &p,
                     bool fixed_orientation) {
  const ModelParams q = at_field(B, p);
  const Eigen::Vector3d P = fixed_orientation ? p_par_fixed(q) : p_par_rot(q);
  return -P.dot(Q) / p.M;
}

double lamb_perp(double B, const Eigen::Vector3d &Q, const ModelParams &p) {
  return -p_perp_rot(at_field(B, p)).dot(Q) / p.M;
}

double magnetization_work(double B0_final, const Eigen::Vector3d &Q0,
                          const ModelParams &p, int n_steps) {
  if (n_steps < 2)
    throw NonPositiveInput("magnetization_work needs n_steps >= 2, got " +
                           std::to_string(n_steps));
  if (B0_final == 0.0)
    return 0.0;

  // P_cas(B) = kappa B exactly, so the B = 0 endpoint of the integrand
  // (E_par + E_perp)/B has the finite limit -kappa . Q0 / M.
  const double dB = B0_final * 1e-6;
  const Eigen::Vector3d kappa = energy_p_cas(dB, p) / dB;

  auto integrand = [&](double B) {
    if (B == 0.0)
      return -kappa.dot(Q0) / p.M;
    const Eigen::Vector3d Q = Q0 - energy_p_cas(B, p);
    return (lamb_parallel(B, Q, p) + lamb_perp(B, Q, p)) / B;
  };

  const double h = B0_final / n_steps;
  double acc = 0.5 * (integrand(0.0) + integrand(B0_final));
  for (int i = 1; i < n_steps; ++i)
    acc += integrand(i * h);
  return acc * h;
}

double delta_e_kin(double B0_final, const Eigen::Vector3d &Q0,
                   const ModelParams &p) {
  // Expanded form (Q0-P)^2 - Q0^2 = P^2 - 2 Q0.P: P is many orders smaller
  // than typical Q0, and the naive difference of squares would lose it.
  const Eigen::Vector3d P = energy_p_cas(B0_final, p);
  return (P.squaredNorm() - 2.0 * Q0.dot(P)) / (2.0 * p.M);
}

double diamagnetic_work(double B0_final, const ModelParams &p) {
  const double alpha_m0 =
      polarizability(Polarizability::kM, 0.0, p).real();
  return -alpha_m0 * B0_final * B0_final;
}

double magnetization_correction(double B0_final, const Eigen::Vector3d &Q0,
                                const ModelParams &p, bool strict) {
  auto energy = [&](double B) {
    const Eigen::Vector3d Q = Q0 - energy_p_cas(B, p);
    return lamb_parallel(B, Q, p) + lamb_perp(B, Q, p);
  };
  const double scale = (B0_final != 0.0) ? std::abs(B0_final) : 1.0;
  if (!strict) {
    const double B = (B0_final != 0.0) ? B0_final : scale * 1e-6;
    return -energy(B) / B;
  }
  // E(B) is quadratic in B, so central differences are exact for both
  // derivatives and the strict form reproduces the shortcut identically.
  const double h = scale * 1e-4;
  const double fp = energy(B0_final + h);
  const double fm = energy(B0_final - h);
  const double f0 = energy(B0_final);
  const double d1 = (fp - fm) / (2.0 * h);
  const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
  return -d1 + 0.5 * B0_final * d2;
}

EnergyLedger energy_ledger(double B0_final, const Eigen::Vector3d &Q0,
                           const ModelParams &p, int n_steps) {
  EnergyLedger led;
  led.E_lamb_par = lamb_parallel(B0_final, Q0, p);
  led.E_lamb_perp = lamb_perp(B0_final, Q0, p);
  led.W_B0 = magnetization_work(B0_final, Q0, p, n_steps);
  led.Delta_E_kin = delta_e_kin(B0_final, Q0, p);
  led.E_diamag = diamagnetic_work(B0_final, p);
  return led;
}

} // namespace casmom
