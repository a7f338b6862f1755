// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Truncated Taylor-series ("jet") arithmetic.
//
// A TaylorJet<T, N> holds the coefficients c[0..N] of a series
// c0 + c1 t + ... + cN t^N and propagates them exactly through +, -, * and /.
// Instantiated with an exact rational scalar type this lets low-order series
// coefficients of an algebraic expression be computed with no rounding at
// all, which is how the library certifies that the anisotropy trace identity
// cancels order by order rather than merely being numerically small.

#pragma once

#include <array>
#include <cstddef>

#include "casmom/errors.hpp"

namespace casmom {

template <typename T, int N> struct TaylorJet {
  static_assert(N >= 0, "jet order must be non-negative");
  std::array<T, N + 1> c{};

  TaylorJet() = default;

  // Series equal to the constant v.
  static TaylorJet constant(const T &v) {
    TaylorJet j;
    j.c[0] = v;
    return j;
  }

  // Series v0 + t, the expansion variable offset by v0.
  static TaylorJet variable(const T &v0) {
    TaylorJet j;
    j.c[0] = v0;
    if constexpr (N >= 1)
      j.c[1] = T(1);
    return j;
  }

  friend TaylorJet operator+(const TaylorJet &a, const TaylorJet &b) {
    TaylorJet r;
    for (int k = 0; k <= N; ++k)
      r.c[k] = a.c[k] + b.c[k];
    return r;
  }

  friend TaylorJet operator-(const TaylorJet &a, const TaylorJet &b) {
    TaylorJet r;
    for (int k = 0; k <= N; ++k)
      r.c[k] = a.c[k] - b.c[k];
    return r;
  }

  friend TaylorJet operator-(const TaylorJet &a) {
    TaylorJet r;
    for (int k = 0; k <= N; ++k)
      r.c[k] = -a.c[k];
    return r;
  }

  // Cauchy product truncated at order N.
  friend TaylorJet operator*(const TaylorJet &a, const TaylorJet &b) {
    TaylorJet r;
    for (int k = 0; k <= N; ++k) {
      T acc{};
      for (int j = 0; j <= k; ++j)
        acc += a.c[j] * b.c[k - j];
      r.c[k] = acc;
    }
    return r;
  }

  // Series long division; requires b to be invertible (b.c[0] != 0).
  friend TaylorJet operator/(const TaylorJet &a, const TaylorJet &b) {
    if (b.c[0] == T(0))
      throw NonPositiveInput("jet division by a series with zero constant term");
    TaylorJet q;
    for (int k = 0; k <= N; ++k) {
      T acc = a.c[k];
      for (int j = 0; j < k; ++j)
        acc -= q.c[j] * b.c[k - j];
      q.c[k] = acc / b.c[0];
    }
    return q;
  }

  friend TaylorJet operator*(const T &s, const TaylorJet &a) {
    TaylorJet r;
    for (int k = 0; k <= N; ++k)
      r.c[k] = s * a.c[k];
    return r;
  }
};

} // namespace casmom
