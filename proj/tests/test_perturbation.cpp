// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Dressed ground state: closed-form coefficient table against exact dense
// diagonalisation, phase and normalisation conventions, and the expansion
// guard rails.  The comparison point (near-isotropic trap, couplings 1e-3,
// field along one principal axis) keeps the truncation error of the
// first-order-in-anisotropy table below the 1e-4 gate.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "casmom/errors.hpp"
#include "casmom/fock.hpp"
#include "casmom/params.hpp"
#include "casmom/perturbation.hpp"

using namespace casmom;

namespace {

using Cd = std::complex<double>;

// Near-isotropic trap with dimensionless chiral coupling cc and Zeeman
// coupling cb along the given axis.
ModelParams make_point(double cc, double cb, int field_axis) {
  RawParams raw;
  raw.omega_x = 0.98;
  raw.omega_y = 1.00;
  raw.omega_z = 1.03;
  const ModelParams s = derive_params(raw);
  raw.C = cc * std::pow(2.0 * s.mu, 1.5) * s.omega_sum *
          std::sqrt(s.omega_x * s.omega_y * s.omega_z) / std::sqrt(s.hbar);
  if (field_axis >= 0) {
    const int j = (field_axis + 1) % 3, k = (field_axis + 2) % 3;
    raw.B0 = Eigen::Vector3d::Zero();
    raw.B0[field_axis] =
        cb * 4.0 * s.mu_star * std::sqrt(s.omega(j) * s.omega(k)) / s.e;
  }
  return derive_params(raw);
}

} // namespace

TEST_CASE("coefficient table matches dense diagonalisation to first order") {
  const ModelParams p = make_point(1e-3, 1e-3, 2);
  const FockBasis basis = build_basis(8);
  const PerturbedState numeric =
      ground_state_numeric(hamiltonian(basis, p, kDressed), basis);

  double worst = 0.0;
  std::size_t checked = 0;
  for (const DressedCoefficient &dc : dressed_coefficients(p)) {
    if (dc.value == Cd(0.0, 0.0))
      continue;
    ++checked;
    const double dev =
        std::abs(numeric.coefficient(dc.state) - dc.value) / std::abs(dc.value);
    worst = std::max(worst, dev);
  }
  CHECK(checked >= 6); // chiral singlet + the five-state field block
  CHECK(worst < 1e-4);
}

TEST_CASE("chiral singlet coefficient is minus the dimensionless coupling") {
  const ModelParams p = make_point(2e-3, 0.0, -1);
  bool found = false;
  for (const DressedCoefficient &dc : dressed_coefficients(p))
    if (dc.state.n_x == 1 && dc.state.n_y == 1 && dc.state.n_z == 1) {
      found = true;
      CHECK(std::abs(dc.value - Cd(-2e-3, 0.0)) < 1e-15);
    }
  CHECK(found);

  // and the numeric state reproduces it to second order in the coupling
  const FockBasis basis = build_basis(8);
  const PerturbedState numeric =
      ground_state_numeric(hamiltonian(basis, p, kDressed), basis);
  CHECK(std::abs(numeric.coefficient({1, 1, 1}) - Cd(-2e-3, 0.0)) < 1e-5);
}

TEST_CASE("field-block coefficients are imaginary at first order") {
  const ModelParams p = make_point(1e-3, 1e-3, 2);
  for (const DressedCoefficient &dc : dressed_coefficients(p)) {
    if (dc.value == Cd(0.0, 0.0))
      continue;
    const bool chiral_singlet =
        dc.state.n_x == 1 && dc.state.n_y == 1 && dc.state.n_z == 1;
    if (chiral_singlet)
      CHECK(std::abs(dc.value.imag()) < 1e-18);
    else
      CHECK(std::abs(dc.value.real()) < 1e-18);
  }
}

TEST_CASE("parity-forbidden amplitudes vanish exactly") {
  // Both couplings flip x and y occupation parity together, and only the
  // chiral term flips z: states like |100> or |010> are unreachable from
  // |000>, so their amplitudes vanish by symmetry, not just to a tolerance.
  const ModelParams p = make_point(1e-3, 1e-3, 2);
  const FockBasis basis = build_basis(6);
  const PerturbedState numeric =
      ground_state_numeric(hamiltonian(basis, p, kDressed), basis);
  CHECK(std::abs(numeric.coefficient({1, 0, 0})) < 1e-13);
  CHECK(std::abs(numeric.coefficient({0, 1, 0})) < 1e-13);
  CHECK(std::abs(numeric.coefficient({1, 0, 1})) < 1e-13);
  CHECK(std::abs(numeric.coefficient({0, 1, 1})) < 1e-13);
}

TEST_CASE("phase and normalisation conventions") {
  const ModelParams p = make_point(1e-3, 1e-3, 2);

  const PerturbedState analytic = ground_state_analytic(p, 8);
  CHECK(std::abs(analytic.amplitudes.norm() - 1.0) < 1e-14);
  CHECK(analytic.coefficient({0, 0, 0}).real() > 0.99);
  CHECK(std::abs(analytic.coefficient({0, 0, 0}).imag()) < 1e-15);
  CHECK(!analytic.perturbative_warning);

  const FockBasis basis = build_basis(8);
  const PerturbedState numeric =
      ground_state_numeric(hamiltonian(basis, p, kDressed), basis);
  CHECK(std::abs(numeric.amplitudes.norm() - 1.0) < 1e-12);
  CHECK(numeric.coefficient({0, 0, 0}).real() > 0.99);
  CHECK(std::abs(numeric.coefficient({0, 0, 0}).imag()) < 1e-12);

  // The two routes describe the same state: overlap deficit is fourth order.
  const Cd overlap = numeric.amplitudes.dot(analytic.amplitudes);
  CHECK(std::abs(overlap) > 1.0 - 1e-8);
}

TEST_CASE("expansion guard rails") {
  CHECK(!ground_state_analytic(make_point(0.05, 0.0, -1), 8)
             .perturbative_warning);
  CHECK(ground_state_analytic(make_point(0.15, 0.0, -1), 8)
            .perturbative_warning);
  CHECK_THROWS_AS(ground_state_analytic(make_point(0.35, 0.0, -1), 8),
                  PerturbationTooLarge);
  CHECK_THROWS_AS(ground_state_analytic(make_point(1e-3, 0.0, -1), 1),
                  NonPositiveInput);
}

TEST_CASE("expectation values and basis mismatch detection") {
  const ModelParams p = make_point(1e-3, 1e-3, 2);
  const FockBasis basis = build_basis(8);
  const OperatorMatrix H = hamiltonian(basis, p, kDressed);
  const PerturbedState numeric = ground_state_numeric(H, basis);

  // <g|H|g> is the ground eigenvalue: below the bare zero point, close to it.
  const double E0 = ground_energy(p);
  const Cd eH = expectation(numeric, H);
  CHECK(std::abs(eH.imag()) < 1e-12);
  CHECK(eH.real() < E0);
  CHECK(E0 - eH.real() < 1e-4); // second-order depression is tiny here

  const OperatorMatrix H6 = hamiltonian(build_basis(6), p, kDressed);
  CHECK_THROWS_AS(expectation(numeric, H6), BasisMismatch);
  CHECK_THROWS_AS(ground_state_numeric(H6, basis), BasisMismatch);
}
