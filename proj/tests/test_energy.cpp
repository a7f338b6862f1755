// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Energy bookkeeping for adiabatic field switching: Lamb energies, ramp work,
// kinetic-energy change and magnetization corrections.  Frozen values were
// computed with 30-digit arithmetic at m_N = 1836, trap frequencies
// (0.98, 1.00, 1.03), dimensionless chiral coupling 1e-3,
// B0 = (0, 0, 3e-4) and initial kinetic momentum Q0 = (0.1, -0.05, 0.2).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "casmom/energy.hpp"
#include "casmom/errors.hpp"
#include "casmom/params.hpp"

using namespace casmom;

namespace {

constexpr double kBz = 3e-4;

ModelParams make_point() {
  RawParams raw;
  raw.omega_x = 0.98;
  raw.omega_y = 1.00;
  raw.omega_z = 1.03;
  const ModelParams s = derive_params(raw);
  raw.C = 1e-3 * std::pow(2.0 * s.mu, 1.5) * s.omega_sum *
          std::sqrt(s.omega_x * s.omega_y * s.omega_z) / std::sqrt(s.hbar);
  raw.B0 = Eigen::Vector3d(0.0, 0.0, kBz);
  raw.Q0 = Eigen::Vector3d(0.1, -0.05, 0.2);
  return derive_params(raw);
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace

TEST_CASE("Lamb energies and the ledger against frozen references") {
  const ModelParams p = make_point();
  const EnergyLedger led = energy_ledger(kBz, p.Q0, p);

  CHECK(rel(led.E_lamb_par, -1.5079276487929217e-19) < 1e-12);
  CHECK(rel(led.E_lamb_perp, -5.4207492100797116e-19) < 1e-12);
  CHECK(rel(led.Delta_E_kin, -6.9286768588725243e-19) < 1e-12);
  CHECK(rel(led.W_B0, -6.9286768588725243e-19) < 1e-10);
  CHECK(rel(led.E_diamag, -4.287427380336131e-13) < 1e-12);

  // The ledger is assembled from the standalone functions.
  CHECK(led.E_lamb_par == lamb_parallel(kBz, p.Q0, p));
  CHECK(led.E_lamb_perp == lamb_perp(kBz, p.Q0, p));
  CHECK(led.Delta_E_kin == delta_e_kin(kBz, p.Q0, p));
  CHECK(led.E_diamag == diamagnetic_work(kBz, p));
}

TEST_CASE("switching work balances the kinetic-energy change") {
  const ModelParams p = make_point();
  const double w = magnetization_work(kBz, p.Q0, p, 10000);
  const double dk = delta_e_kin(kBz, p.Q0, p);
  CHECK(rel(w, dk) < 1e-10);

  // The integrand is linear in B, so even a crude trapezoid is exact.
  CHECK(rel(magnetization_work(kBz, p.Q0, p, 16), dk) < 1e-10);

  CHECK_THROWS_AS(magnetization_work(kBz, p.Q0, p, 1), NonPositiveInput);
  CHECK(magnetization_work(0.0, p.Q0, p, 100) == 0.0);
  CHECK(delta_e_kin(0.0, p.Q0, p) == 0.0);
}

TEST_CASE("vacuum momentum along the ramp is exactly linear in B") {
  const ModelParams p = make_point();
  const Eigen::Vector3d p1 = energy_p_cas(0.5 * kBz, p);
  const Eigen::Vector3d p2 = energy_p_cas(kBz, p);
  CHECK((p2 - 2.0 * p1).norm() <= 1e-15 * p2.norm());

  // Ramp direction follows B0; with this field the momentum is along z.
  CHECK(p2.x() == 0.0);
  CHECK(p2.y() == 0.0);
  CHECK(p2.z() != 0.0);
}

TEST_CASE("fixed-orientation longitudinal Lamb energy") {
  const ModelParams p = make_point();
  // Body-frame longitudinal momentum at this field is (0, 0, Pz) with the
  // frozen Pz below; only Q0_z couples.
  const double pz = 3.8676973695714195e-12;
  const double want = -pz * p.Q0.z() / p.M;
  CHECK(rel(lamb_parallel(kBz, p.Q0, p, true), want) < 1e-10);

  // Orientation averaging moves the value: the two must differ.
  CHECK(rel(lamb_parallel(kBz, p.Q0, p, true),
            lamb_parallel(kBz, p.Q0, p, false)) > 0.01);
}

TEST_CASE("magnetization correction: shortcut and strict forms agree") {
  const ModelParams p = make_point();
  const double shortcut = magnetization_correction(kBz, p.Q0, p, false);
  CHECK(rel(shortcut, 2.3095589529575446e-15) < 1e-12);

  // E(B) is quadratic in B, so -dE/dB + (B/2) d^2E/dB^2 collapses to -E/B.
  const double strict = magnetization_correction(kBz, p.Q0, p, true);
  CHECK(rel(strict, shortcut) < 1e-6);
}
