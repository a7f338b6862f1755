// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Run configuration, parameter sweeps and deterministic tabular output.
//
// Configuration is a single strict-schema JSON document: unknown keys are
// rejected (UnknownField), malformed JSON or wrong value types raise
// ParseError, and out-of-domain values raise RangeError.  All result files
// are byte-deterministic: data rows carry no timestamps or machine state, and
// the provenance sidecar records only the numeric settings of the run.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "casmom/energy.hpp"
#include "casmom/params.hpp"
#include "casmom/qed.hpp"

namespace casmom {

// Sweep descriptor.  steps = 0 means a single row at the base parameters.
struct SweepSpec {
  std::string param; // B0 | B0_x | B0_y | B0_z | C | m_N | omega_scale |
                     // Q0_x | Q0_y | Q0_z
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

struct PipelineFlags {
  bool semiclassical = true; // regularized-quadrature P_sc (else closed form)
  bool qed_analytic = true;  // closed-form transverse/longitudinal momenta
  bool qed_fock = false;     // resolvent cross-check at base params (sidecar)
  bool energy = true;        // switching-work / kinetic-energy ledger
};

struct RunConfig {
  RawParams params;
  int n_max = 8;                  // basis cutoff for the resolvent pipeline
  double rel_tol = 1e-4;          // semiclassical extrapolation agreement
  std::vector<double> eps_ladder; // empty = library default ladder
  int energy_steps = 10000;       // trapezoid panels of the switching work
  PipelineFlags pipelines;
  SweepSpec sweep;
};

// One data row of the results table.
struct ResultRow {
  double value = 0.0; // swept parameter value (or 0 for a single-point run)
  CasimirReport report;
  Eigen::Vector3d P_sc = Eigen::Vector3d::Zero();
  EnergyLedger ledger;
  double resid_work_balance = 0.0;  // |W_B0 - Delta_E_kin| / energy scale
  double resid_pseudomomentum = 0.0; // |P_kin + P_total + P_Abr|
};

// Parses and validates a config document from JSON text.
RunConfig parse_config(const std::string &json_text);

// Reads, parses and validates a config file.  Throws ParseError when the file
// cannot be read.
RunConfig load_config(const std::string &path);

// Returns the base parameters with the swept parameter set to the given value.
RawParams apply_sweep(const RawParams &base, const std::string &param,
                      double value);

// Evaluates every enabled pipeline at each sweep point, in sweep order.
std::vector<ResultRow> compute_rows(const RunConfig &cfg);

// Fixed-column CSV (RFC-4180 quoting).  Every row records the numeric
// settings that produced it; floating-point values are printed with %.17g so
// that re-runs are byte-identical.
void write_results_csv(std::ostream &os, const RunConfig &cfg,
                       const std::vector<ResultRow> &rows);

// Provenance sidecar: numeric settings, pipeline selection, and (when the
// resolvent pipeline is enabled) its base-point result.  Deterministic JSON,
// no timestamps.
void write_provenance(std::ostream &os, const RunConfig &cfg);

// Runs the configured pipelines and writes results.csv plus provenance.json
// into out_dir (created if missing).
void run(const RunConfig &cfg, const std::string &out_dir);

} // namespace casmom
