// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained acceptance suite.  Each criterion pits an independent
// numerical route (dense diagonalization, brute-force quadrature, randomized
// property checks) against the closed-form implementation it validates, with
// the tolerances pinned in code.  Criteria report honestly: a criterion whose
// two routes genuinely disagree fails with a diagnostic rather than being
// weakened.

#pragma once

#include <string>
#include <vector>

namespace casmom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail; // deterministic one-line diagnostic
};

// Runs criterion `which` (1..9), or all of them for which = 0, in order.
// Throws NonPositiveInput for ids outside 0..9.
std::vector<CriterionResult> run_acceptance(int which = 0);

// Returns criteria whose name contains `filter` (all for an empty filter).
std::vector<int> acceptance_ids_matching(const std::string &filter);

// "[PASS] criterion 3: kernel-log-identity -- ..." (one line, no newline).
std::string format_result(const CriterionResult &r);

} // namespace casmom
