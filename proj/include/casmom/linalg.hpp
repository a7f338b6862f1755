// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Thin LAPACKE wrapper for the dense complex Hermitian eigenproblem.
//
// Eigen's SelfAdjointEigenSolver is an order of magnitude slower than
// LAPACK's divide-and-conquer driver at the matrix sizes the oscillator-basis
// pipeline needs (a few thousand), so the heavy lifting goes through zheevd.
// OpenBLAS threading is pinned to one thread for run-to-run determinism.

#pragma once

#include <Eigen/Dense>

namespace casmom {

struct EighResult {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXcd eigenvectors; // column k belongs to eigenvalues[k]
};

// Computes the full spectrum of a Hermitian matrix (the upper triangle is
// used).  Throws ResolventSingular if LAPACK reports a failure.
EighResult eigh(const Eigen::MatrixXcd &H);

} // namespace casmom
