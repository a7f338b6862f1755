// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/fock.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "casmom/errors.hpp"

namespace casmom {

namespace {

using Cd = std::complex<double>;

// Dense operators hold (n_max+1)^6 complex entries; past this cutoff a single
// matrix would exceed ~1 GiB, so construction is refused.
constexpr int kDenseOpMaxCutoff = 14;

void check_dense_budget(const FockBasis &b) {
  if (b.n_max() > kDenseOpMaxCutoff)
    throw TruncationTooLarge(
        "dense operator at n_max = " + std::to_string(b.n_max()) +
        " exceeds the storage budget (max " +
        std::to_string(kDenseOpMaxCutoff) + ")");
}

// Single-axis ladder blocks of size (n_max+1).
Eigen::MatrixXcd axis_lowering(int n1) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n1, n1);
  for (int n = 1; n < n1; ++n)
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXcd axis_position(int n1, double mu_w, double hbar) {
  const Eigen::MatrixXcd a = axis_lowering(n1);
  return std::sqrt(hbar / (2.0 * mu_w)) * (a + a.adjoint());
}

Eigen::MatrixXcd axis_momentum(int n1, double mu_w, double hbar) {
  const Eigen::MatrixXcd a = axis_lowering(n1);
  return Cd(0.0, 1.0) * std::sqrt(hbar * mu_w / 2.0) * (a.adjoint() - a);
}

// Kronecker placement  Ax (x) Ay (x) Az  over the flat basis enumeration
// (x slowest, z fastest).  Sparse scatter over the nonzero pattern of the
// single-axis blocks keeps this O(size * nnz_x * nnz_y * nnz_z).
Eigen::MatrixXcd kron3(const Eigen::MatrixXcd &Ax, const Eigen::MatrixXcd &Ay,
                       const Eigen::MatrixXcd &Az) {
  const int n1 = static_cast<int>(Ax.rows());
  const int N = n1 * n1 * n1;

  // Per-column nonzero lists of each block.
  auto columns = [n1](const Eigen::MatrixXcd &A) {
    std::vector<std::vector<std::pair<int, Cd>>> cols(n1);
    for (int j = 0; j < n1; ++j)
      for (int i = 0; i < n1; ++i)
        if (A(i, j) != Cd(0.0, 0.0))
          cols[j].emplace_back(i, A(i, j));
    return cols;
  };
  const auto cx = columns(Ax), cy = columns(Ay), cz = columns(Az);

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  for (int jx = 0; jx < n1; ++jx)
    for (int jy = 0; jy < n1; ++jy)
      for (int jz = 0; jz < n1; ++jz) {
        const int col = (jx * n1 + jy) * n1 + jz;
        for (const auto &[ix, vx] : cx[jx])
          for (const auto &[iy, vy] : cy[jy]) {
            const Cd vxy = vx * vy;
            for (const auto &[iz, vz] : cz[jz])
              M((ix * n1 + iy) * n1 + iz, col) = vxy * vz;
          }
      }
  return M;
}

Eigen::MatrixXcd axis_identity(int n1) { return Eigen::MatrixXcd::Identity(n1, n1); }

// Verifies the Hermiticity tag before publishing an operator.
OperatorMatrix tag(Eigen::MatrixXcd &&m, int n_max, bool hermitian) {
  if (hermitian) {
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (scale > 0.0 && asym > 1e-12 * scale)
      throw ResolventSingular("operator tagged hermitian violates |A - A†| "
                              "<= 1e-12 |A| (asymmetry " +
                              std::to_string(asym / scale) + ")");
  }
  OperatorMatrix op;
  op.m = std::move(m);
  op.n_max = n_max;
  op.hermitian = hermitian;
  return op;
}

// Places a single-axis block on the given axis, identity elsewhere.
Eigen::MatrixXcd lift(const Eigen::MatrixXcd &A, int axis, int n1) {
  const Eigen::MatrixXcd I = axis_identity(n1);
  switch (axis) {
  case 0:
    return kron3(A, I, I);
  case 1:
    return kron3(I, A, I);
  case 2:
    return kron3(I, I, A);
  default:
    throw NonPositiveInput("axis index must be 0, 1 or 2");
  }
}

} // namespace

FockBasis::FockBasis(int n_max) : m_n_max(n_max) {
  if (n_max < 0)
    throw NonPositiveInput("n_max must be >= 0, got " + std::to_string(n_max));
  if (n_max > 30)
    throw TruncationTooLarge("n_max = " + std::to_string(n_max) +
                             " exceeds the supported cap of 30");
  const int n1 = n_max + 1;
  m_size = n1 * n1 * n1;
}

int FockBasis::index(const FockState &s) const {
  const int n1 = m_n_max + 1;
  if (s.n_x < 0 || s.n_y < 0 || s.n_z < 0 || s.n_x > m_n_max ||
      s.n_y > m_n_max || s.n_z > m_n_max)
    throw BasisMismatch("state |" + std::to_string(s.n_x) + "," +
                        std::to_string(s.n_y) + "," + std::to_string(s.n_z) +
                        "> outside basis with n_max = " +
                        std::to_string(m_n_max));
  return (s.n_x * n1 + s.n_y) * n1 + s.n_z;
}

FockState FockBasis::state(int idx) const {
  if (idx < 0 || idx >= m_size)
    throw BasisMismatch("flat index " + std::to_string(idx) +
                        " outside basis of size " + std::to_string(m_size));
  const int n1 = m_n_max + 1;
  FockState s;
  s.n_z = idx % n1;
  s.n_y = (idx / n1) % n1;
  s.n_x = idx / (n1 * n1);
  return s;
}

FockBasis build_basis(int n_max) { return FockBasis(n_max); }

OperatorMatrix position_op(const FockBasis &b, int axis, const ModelParams &p) {
  check_dense_budget(b);
  const int n1 = b.n_max() + 1;
  const double mu_w = p.mu * p.omega(axis);
  return tag(lift(axis_position(n1, mu_w, p.hbar), axis, n1), b.n_max(), true);
}

OperatorMatrix momentum_op(const FockBasis &b, int axis, const ModelParams &p) {
  check_dense_budget(b);
  const int n1 = b.n_max() + 1;
  const double mu_w = p.mu * p.omega(axis);
  return tag(lift(axis_momentum(n1, mu_w, p.hbar), axis, n1), b.n_max(), true);
}

OperatorMatrix angular_momentum_op(const FockBasis &b, int axis,
                                   const ModelParams &p) {
  check_dense_budget(b);
  const int n1 = b.n_max() + 1;
  const int j = (axis + 1) % 3, k = (axis + 2) % 3;
  // (r x p)_axis = x_j p_k - x_k p_j with (axis, j, k) cyclic.
  const Eigen::MatrixXcd xj =
      axis_position(n1, p.mu * p.omega(j), p.hbar);
  const Eigen::MatrixXcd xk =
      axis_position(n1, p.mu * p.omega(k), p.hbar);
  const Eigen::MatrixXcd pj =
      axis_momentum(n1, p.mu * p.omega(j), p.hbar);
  const Eigen::MatrixXcd pk =
      axis_momentum(n1, p.mu * p.omega(k), p.hbar);

  // Assemble by placing blocks on their axes; axis itself carries identity.
  Eigen::MatrixXcd blocks_a[3], blocks_b[3];
  for (int t = 0; t < 3; ++t)
    blocks_a[t] = blocks_b[t] = axis_identity(n1);
  blocks_a[j] = xj;
  blocks_a[k] = pk;
  blocks_b[k] = xk;
  blocks_b[j] = pj;
  Eigen::MatrixXcd L = kron3(blocks_a[0], blocks_a[1], blocks_a[2]) -
                       kron3(blocks_b[0], blocks_b[1], blocks_b[2]);
  return tag(std::move(L), b.n_max(), true);
}

OperatorMatrix chiral_op(const FockBasis &b, const ModelParams &p) {
  check_dense_budget(b);
  const int n1 = b.n_max() + 1;
  Eigen::MatrixXcd xyz =
      kron3(axis_position(n1, p.mu * p.omega_x, p.hbar),
            axis_position(n1, p.mu * p.omega_y, p.hbar),
            axis_position(n1, p.mu * p.omega_z, p.hbar));
  return tag(p.C * std::move(xyz), b.n_max(), true);
}

OperatorMatrix zeeman_op(const FockBasis &b, const ModelParams &p) {
  check_dense_budget(b);
  Eigen::MatrixXcd Z =
      Eigen::MatrixXcd::Zero(b.size(), b.size());
  for (int a = 0; a < 3; ++a)
    if (p.B0[a] != 0.0)
      Z += (p.e / (2.0 * p.mu_star)) * p.B0[a] *
           angular_momentum_op(b, a, p).m;
  return tag(std::move(Z), b.n_max(), true);
}

OperatorMatrix delta_v_op(const FockBasis &b, const ModelParams &p) {
  check_dense_budget(b);
  const int n1 = b.n_max() + 1;
  const int N = b.size();

  Eigen::MatrixXcd x[3];
  for (int a = 0; a < 3; ++a)
    x[a] = axis_position(n1, p.mu * p.omega(a), p.hbar);

  // (r x B0)^2 = |B0|^2 r^2 - (r . B0)^2.
  Eigen::MatrixXcd quad = Eigen::MatrixXcd::Zero(N, N);
  const double B2 = p.B0.squaredNorm();
  if (B2 != 0.0) {
    for (int a = 0; a < 3; ++a)
      quad += B2 * lift(x[a] * x[a], a, n1);
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) {
        const double w = p.B0[a] * p.B0[c];
        if (w == 0.0)
          continue;
        if (a == c) {
          quad -= w * lift(x[a] * x[a], a, n1);
        } else {
          Eigen::MatrixXcd blocks[3] = {axis_identity(n1), axis_identity(n1),
                                        axis_identity(n1)};
          blocks[a] = x[a];
          blocks[c] = x[c];
          quad -= w * kron3(blocks[0], blocks[1], blocks[2]);
        }
      }
  }

  // (e/M) Q0 . (r x B0) = (e/M) (B0 x Q0) . r.
  Eigen::MatrixXcd lin = Eigen::MatrixXcd::Zero(N, N);
  const Eigen::Vector3d v = p.B0.cross(p.Q0);
  for (int a = 0; a < 3; ++a)
    if (v[a] != 0.0)
      lin += v[a] * lift(x[a], a, n1);

  const double quad_coef =
      (p.e * p.e / 2.0) * (1.0 / p.M + p.mu / (p.mu_star * p.mu_star));
  Eigen::MatrixXcd dv = quad_coef * quad + (p.e / p.M) * lin;
  return tag(std::move(dv), b.n_max(), true);
}

OperatorMatrix hamiltonian(const FockBasis &b, const ModelParams &p,
                           unsigned terms) {
  check_dense_budget(b);
  const int N = b.size();
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);

  if (terms & kHarmonic) {
    // Diagonal hbar w (n + 1/2) per axis.
    for (int i = 0; i < N; ++i) {
      const FockState s = b.state(i);
      H(i, i) += p.hbar * (p.omega_x * (s.n_x + 0.5) +
                           p.omega_y * (s.n_y + 0.5) +
                           p.omega_z * (s.n_z + 0.5));
    }
  }
  if (terms & kChiral)
    H += chiral_op(b, p).m;
  if (terms & kZeeman)
    H += zeeman_op(b, p).m;
  if (terms & kDeltaV)
    H += delta_v_op(b, p).m;

  return tag(std::move(H), b.n_max(), true);
}

double kinetic_shift(const ModelParams &p) {
  return p.Q0.squaredNorm() / (2.0 * p.M);
}

double ground_energy(const ModelParams &p) {
  return p.hbar * p.omega_sum / 2.0;
}

} // namespace casmom
