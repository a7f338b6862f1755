// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/linalg.hpp"

#include <complex>
#include <string>

#include <lapacke.h>

#include "casmom/errors.hpp"

extern "C" void openblas_set_num_threads(int);

namespace casmom {

EighResult eigh(const Eigen::MatrixXcd &H) {
  // Single-threaded BLAS: bit-identical results across repeated runs.
  static const bool threads_pinned = [] {
    openblas_set_num_threads(1);
    return true;
  }();
  (void)threads_pinned;

  if (H.rows() != H.cols())
    throw BasisMismatch("eigh needs a square matrix, got " +
                        std::to_string(H.rows()) + "x" +
                        std::to_string(H.cols()));

  const lapack_int n = static_cast<lapack_int>(H.rows());
  EighResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors = H; // zheevd overwrites the input with the eigenvectors

  // Column-major storage matches Eigen's default, so no transposition is
  // needed; 'L' reads the lower triangle, which for Hermitian input is
  // equivalent to the upper.
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', n,
      reinterpret_cast<lapack_complex_double *>(r.eigenvectors.data()), n,
      r.eigenvalues.data());
  if (info != 0)
    throw ResolventSingular("LAPACKE_zheevd failed with info = " +
                            std::to_string(info));
  return r;
}

} // namespace casmom
