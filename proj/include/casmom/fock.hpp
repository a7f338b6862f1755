// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Three-axis harmonic-oscillator (Fock) basis and dense operators on it.
//
// Basis ordering: a state |nx, ny, nz> with all occupations in [0, n_max]
// sits at flat index  (nx*(n_max+1) + ny)*(n_max+1) + nz,  i.e. nz varies
// fastest.  Operators are dense complex matrices over that enumeration,
// assembled from single-axis ladder blocks via Kronecker placement.
//
// Ladder convention:  a = sqrt(mu w / 2 hbar) (x + i p/(mu w)),  so
//   x = sqrt(hbar/(2 mu w)) (a + a†),   p = i sqrt(hbar mu w / 2) (a† - a),
// and <n-1| p |n> = -i sqrt(hbar mu w n / 2).

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "casmom/params.hpp"

namespace casmom {

struct FockState {
  int n_x = 0, n_y = 0, n_z = 0;
};

class FockBasis {
public:
  explicit FockBasis(int n_max);

  int n_max() const { return m_n_max; }
  int size() const { return m_size; }

  // Flat index of a state; throws BasisMismatch if any occupation is outside
  // [0, n_max].
  int index(const FockState &s) const;

  // Inverse of index().
  FockState state(int idx) const;

private:
  int m_n_max;
  int m_size;
};

// Validated constructor wrapper.  n_max = 0 gives the single state |000>.
// The cap n_max <= 30 keeps the flat index well inside int range.
FockBasis build_basis(int n_max);

// Dense operator tagged with the cutoff it was built over.  When `hermitian`
// is set the constructor has verified max|A - A†| <= 1e-12 * max|A|.
struct OperatorMatrix {
  Eigen::MatrixXcd m;
  int n_max = -1;
  bool hermitian = false;
};

// Relative-coordinate position x_axis (axis in {0,1,2}).
OperatorMatrix position_op(const FockBasis &b, int axis, const ModelParams &p);

// Relative-momentum p_axis.
OperatorMatrix momentum_op(const FockBasis &b, int axis, const ModelParams &p);

// Angular momentum (r x p)_axis.
OperatorMatrix angular_momentum_op(const FockBasis &b, int axis,
                                   const ModelParams &p);

// Chiral potential  C x y z.
OperatorMatrix chiral_op(const FockBasis &b, const ModelParams &p);

// Paramagnetic Zeeman coupling  (e / 2 mu*) B0 . (r x p).
OperatorMatrix zeeman_op(const FockBasis &b, const ModelParams &p);

// Field-quadratic and pseudo-momentum corrections
//   (e^2/2)(1/M + mu/mu*^2) (r x B0)^2  +  (e/M) (B0 x Q0) . r .
OperatorMatrix delta_v_op(const FockBasis &b, const ModelParams &p);

// Term selection for hamiltonian().
enum HamiltonianTerms : unsigned {
  kHarmonic = 1u << 0,
  kChiral = 1u << 1,
  kZeeman = 1u << 2,
  kDeltaV = 1u << 3,
  // Default: the dressed-state Hamiltonian, first order in C and B0.
  kDressed = kHarmonic | kChiral | kZeeman,
  kAllTerms = kDressed | kDeltaV,
};

// Relative-motion Hamiltonian.  The centre-of-mass kinetic constant
// |Q0|^2 / (2M) is excluded; add kinetic_shift() when absolute energies
// matter.
OperatorMatrix hamiltonian(const FockBasis &b, const ModelParams &p,
                           unsigned terms = kDressed);

// Constant centre-of-mass kinetic energy |Q0|^2 / (2M).
double kinetic_shift(const ModelParams &p);

// Unperturbed ground energy hbar (wx + wy + wz)/2 of the harmonic part.
double ground_energy(const ModelParams &p);

} // namespace casmom
