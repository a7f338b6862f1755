// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/perturbation.hpp"

#include <cmath>
#include <string>

#include "casmom/errors.hpp"
#include "casmom/linalg.hpp"

namespace casmom {

namespace {

using Cd = std::complex<double>;
constexpr Cd kI{0.0, 1.0};

// Expansion-parameter policy shared by the analytic route.
void check_perturbative(const AnisotropySet &a, bool *warn) {
  double eps = std::abs(a.curlyC);
  for (double b : a.curlyB0)
    eps = std::max(eps, std::abs(b));
  if (eps > 0.3)
    throw PerturbationTooLarge(
        "expansion parameter " + std::to_string(eps) +
        " exceeds the hard limit 0.3 for first-order dressed states");
  if (eps > 0.1)
    *warn = true;
}

} // namespace

std::complex<double> PerturbedState::coefficient(const FockState &s) const {
  const FockBasis b(n_max);
  return amplitudes[b.index(s)];
}

std::vector<DressedCoefficient> dressed_coefficients(const ModelParams &p) {
  const AnisotropySet a = anisotropy(p);
  const double w[3] = {p.omega_x, p.omega_y, p.omega_z};

  std::vector<DressedCoefficient> out;
  out.push_back({FockState{1, 1, 1}, Cd(-a.curlyC, 0.0)});

  // Field along axis c couples the oscillator pair on the other two axes.
  // The block below is written for c = z; the x and y blocks follow by the
  // cyclic axis relabelling sigma: x->y->z->x applied once (c = x) or twice
  // (c = y).  perm[base_axis] gives the actual axis.
  for (int c = 0; c < 3; ++c) {
    const double B = a.curlyB0[c];
    if (B == 0.0)
      continue;
    const int m = (c == 2) ? 0 : (c == 0) ? 1 : 2;
    const int perm[3] = {(0 + m) % 3, (1 + m) % 3, (2 + m) % 3};
    const double wx = w[perm[0]], wy = w[perm[1]], wz = w[perm[2]];
    const double eta = (wy - wx) / (wy + wx);
    const double CC = a.curlyC;
    const double s2 = std::sqrt(2.0);

    struct Base {
      int n[3];
      Cd v;
    };
    const Base block[5] = {
        {{1, 1, 0}, -kI * B * eta},
        {{0, 0, 1}, kI * B * CC * eta},
        {{2, 2, 1}, 2.0 * kI * B * CC * eta},
        {{2, 0, 1}, -s2 * kI * B * CC * (2.0 * wx - wz * eta) / (wz + 2.0 * wx)},
        {{0, 2, 1}, s2 * kI * B * CC * (2.0 * wy + wz * eta) / (wz + 2.0 * wy)},
    };

    for (const Base &e : block) {
      FockState s;
      int n[3] = {0, 0, 0};
      for (int base = 0; base < 3; ++base)
        n[perm[base]] = e.n[base];
      s.n_x = n[0];
      s.n_y = n[1];
      s.n_z = n[2];
      out.push_back({s, e.v});
    }
  }
  return out;
}

PerturbedState ground_state_analytic(const ModelParams &p, int n_max) {
  if (n_max < 2)
    throw NonPositiveInput(
        "ground_state_analytic needs n_max >= 2 to host the "
        "first-order states, got " +
        std::to_string(n_max));
  const FockBasis b = build_basis(n_max);

  PerturbedState st;
  st.n_max = n_max;
  st.perturbative_warning = false;
  check_perturbative(anisotropy(p), &st.perturbative_warning);

  st.amplitudes = Eigen::VectorXcd::Zero(b.size());
  st.amplitudes[b.index(FockState{0, 0, 0})] = 1.0;
  for (const DressedCoefficient &dc : dressed_coefficients(p)) {
    // Coefficients from different field axes can target the same state; add.
    st.amplitudes[b.index(dc.state)] += dc.value;
  }
  st.amplitudes.normalize();
  return st;
}

PerturbedState ground_state_numeric(const OperatorMatrix &H,
                                    const FockBasis &basis) {
  if (H.n_max != basis.n_max())
    throw BasisMismatch("Hamiltonian cutoff " + std::to_string(H.n_max) +
                        " vs basis cutoff " + std::to_string(basis.n_max()));

  const EighResult r = eigh(H.m);
  const int N = basis.size();
  if (N > 1) {
    const double gap = r.eigenvalues[1] - r.eigenvalues[0];
    const double scale = std::max(std::abs(r.eigenvalues[0]), 1e-300);
    if (gap <= 1e-10 * scale)
      throw DegenerateGroundState("spectral gap " + std::to_string(gap) +
                                  " too small relative to the ground energy");
  }

  PerturbedState st;
  st.n_max = basis.n_max();
  st.amplitudes = r.eigenvectors.col(0);

  const Cd c0 = st.amplitudes[basis.index(FockState{0, 0, 0})];
  if (std::abs(c0) < 0.5)
    throw DegenerateGroundState(
        "|000> amplitude " + std::to_string(std::abs(c0)) +
        " < 0.5; the state is not perturbatively connected to |000> and the "
        "phase convention is ill defined");
  st.amplitudes *= std::conj(c0) / std::abs(c0);
  return st;
}

std::complex<double> expectation(const PerturbedState &state,
                                 const OperatorMatrix &A) {
  if (state.n_max != A.n_max)
    throw BasisMismatch("state cutoff " + std::to_string(state.n_max) +
                        " vs operator cutoff " + std::to_string(A.n_max));
  if (A.m.rows() != state.amplitudes.size())
    throw BasisMismatch("operator dimension does not match state dimension");
  return state.amplitudes.dot(A.m * state.amplitudes);
}

} // namespace casmom
