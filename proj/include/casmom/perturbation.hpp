// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Dressed ground state of the chiral oscillator in a magnetic field.
//
// Two independent routes produce the same state:
//   * ground_state_analytic: first order in the dimensionless chiral coupling
//     curlyC and Zeeman couplings curlyB0, including the mixed curlyC*curlyB0
//     terms, from a closed-form coefficient table;
//   * ground_state_numeric: exact dense diagonalisation of the truncated
//     Hamiltonian.
// Their agreement (coefficient by coefficient) is the first acceptance gate
// of the whole pipeline.
//
// Phase convention: the amplitude of |000> is real and positive.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "casmom/fock.hpp"
#include "casmom/params.hpp"

namespace casmom {

struct PerturbedState {
  Eigen::VectorXcd amplitudes; // over the FockBasis flat enumeration
  int n_max = -1;
  // Set when an expansion parameter exceeds 0.1 (the analytic route is then
  // first-order in name only).
  bool perturbative_warning = false;

  // Amplitude of a given occupation state.
  std::complex<double> coefficient(const FockState &s) const;
};

// One entry of the closed-form first-order expansion.
struct DressedCoefficient {
  FockState state;
  std::complex<double> value;
};

// Closed-form expansion coefficients of the dressed ground state, excluding
// the |000> reference amplitude.  With curlyC, curlyB0[i] and eta from
// anisotropy(p), the nonzero entries are the chiral singlet
//     c_{111} = -curlyC
// plus, for each field axis, a five-state block.  For B0 along z (field axis
// paired with the (x, y) oscillators, eta = eta[y][x]):
//     c_{110} = -i curlyB0z eta
//     c_{001} = +i curlyB0z curlyC eta
//     c_{221} = +2i curlyB0z curlyC eta
//     c_{201} = -sqrt(2) i curlyB0z curlyC (2 wx - wz eta)/(wz + 2 wx)
//     c_{021} = +sqrt(2) i curlyB0z curlyC (2 wy + wz eta)/(wz + 2 wy)
// The x and y field blocks follow by cyclic relabelling of the axes.
// Coefficients from different field axes add.
std::vector<DressedCoefficient> dressed_coefficients(const ModelParams &p);

// Dressed ground state from the coefficient table, normalised, hosted on a
// basis with the given cutoff (n_max >= 2).
//
// Throws PerturbationTooLarge when max(|curlyC|, |curlyB0|) > 0.3; sets
// perturbative_warning above 0.1.
PerturbedState ground_state_analytic(const ModelParams &p, int n_max = 8);

// Ground state of a dense Hamiltonian by full diagonalisation.  Throws
// DegenerateGroundState when the spectral gap is too small to identify a
// unique ground state, or when the |000> amplitude is too small for the phase
// convention to make sense.
PerturbedState ground_state_numeric(const OperatorMatrix &H,
                                    const FockBasis &basis);

// <state| A |state>.  Throws BasisMismatch on cutoff disagreement.
std::complex<double> expectation(const PerturbedState &state,
                                 const OperatorMatrix &A);

} // namespace casmom
