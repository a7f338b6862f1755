// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Error taxonomy for the casmom library.
//
// Every exception carries a category that the CLI maps onto its exit codes:
//   kInput       -> exit 2  (bad user input / configuration)
//   kConvergence -> exit 3  (a numeric procedure failed to converge)
//   kInternal    -> exit 4  (an internal invariant was violated; a bug)
// Library code throws; it never calls std::exit or prints to stderr.

#pragma once

#include <stdexcept>
#include <string>

namespace casmom {

enum class ErrorCategory { kInput, kConvergence, kInternal };

// The CLI exit code for a category (see table above).
inline int exit_code(ErrorCategory cat) {
  switch (cat) {
  case ErrorCategory::kInput:
    return 2;
  case ErrorCategory::kConvergence:
    return 3;
  default:
    return 4;
  }
}

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, const std::string &what_arg)
      : std::runtime_error(what_arg), m_cat(cat) {}
  ErrorCategory category() const noexcept { return m_cat; }

private:
  ErrorCategory m_cat;
};

//------------------------------------------------------------------------------
// Input errors (exit 2)
//------------------------------------------------------------------------------

// A quantity that must be strictly positive (mass, frequency, tolerance, ...)
// was zero or negative.
class NonPositiveInput : public Error {
public:
  explicit NonPositiveInput(const std::string &w)
      : Error(ErrorCategory::kInput, "non-positive input: " + w) {}
};

// The two masses are exactly equal, so the mass-asymmetric reduced mass
// m1*m2/(m1 - m2) is undefined.  Callers probing the equal-mass limit should
// approach it from nearby values instead.
class DegenerateMasses : public Error {
public:
  explicit DegenerateMasses(const std::string &w)
      : Error(ErrorCategory::kInput, "degenerate masses: " + w) {}
};

// The requested oscillator-basis cutoff would exceed the dense-storage budget.
class TruncationTooLarge : public Error {
public:
  explicit TruncationTooLarge(const std::string &w)
      : Error(ErrorCategory::kInput, "truncation too large: " + w) {}
};

// A perturbative expansion parameter is far outside the validity of first-order
// dressed states.  Below the hard limit the condition is only a warning flag on
// the returned state.
class PerturbationTooLarge : public Error {
public:
  explicit PerturbationTooLarge(const std::string &w)
      : Error(ErrorCategory::kInput, "perturbation too large: " + w) {}
};

// A frequency-domain response was requested exactly on (or too close to) one of
// its resonance poles.
class OnResonance : public Error {
public:
  explicit OnResonance(const std::string &w)
      : Error(ErrorCategory::kInput, "on resonance: " + w) {}
};

// A plane-wave argument violated the vacuum dispersion relation |k| = omega/c.
class OffShell : public Error {
public:
  explicit OffShell(const std::string &w)
      : Error(ErrorCategory::kInput, "off shell: " + w) {}
};

// A bound-state excitation energy that must lie below the reference level
// (negative transition energy) was zero or positive.
class NonNegativeTransitionEnergy : public Error {
public:
  explicit NonNegativeTransitionEnergy(const std::string &w)
      : Error(ErrorCategory::kInput, "non-negative transition energy: " + w) {}
};

//------------------------------------------------------------------------------
// Configuration errors (exit 2)
//------------------------------------------------------------------------------

// A configuration file could not be read or is not well-formed JSON (this
// includes type mismatches such as a string where a number is required).
// Also raised when an output file cannot be opened for writing.
class ParseError : public Error {
public:
  explicit ParseError(const std::string &w)
      : Error(ErrorCategory::kInput, "parse error: " + w) {}
};

// A configuration object contains a key the schema does not define.  Strict
// rejection keeps typos from silently falling back to defaults.
class UnknownField : public Error {
public:
  explicit UnknownField(const std::string &w)
      : Error(ErrorCategory::kInput, "unknown field: " + w) {}
};

// A configuration value is outside its documented domain.
class RangeError : public Error {
public:
  explicit RangeError(const std::string &w)
      : Error(ErrorCategory::kInput, "range error: " + w) {}
};

//------------------------------------------------------------------------------
// Convergence errors (exit 3)
//------------------------------------------------------------------------------

// An adaptive or extrapolated quadrature did not reach its tolerance.
class QuadratureNotConverged : public Error {
public:
  explicit QuadratureNotConverged(const std::string &w)
      : Error(ErrorCategory::kConvergence, "quadrature not converged: " + w) {}
};

// An orientation-average grid refinement changed the result beyond tolerance.
class GridTooCoarse : public Error {
public:
  explicit GridTooCoarse(const std::string &w)
      : Error(ErrorCategory::kConvergence, "grid too coarse: " + w) {}
};

// The numeric ground state is (nearly) degenerate, so "the" ground state and
// its phase convention are ill defined.
class DegenerateGroundState : public Error {
public:
  explicit DegenerateGroundState(const std::string &w)
      : Error(ErrorCategory::kConvergence, "degenerate ground state: " + w) {}
};

//------------------------------------------------------------------------------
// Internal errors (exit 4)
//------------------------------------------------------------------------------

// Two objects built over different oscillator-basis cutoffs were combined.
class BasisMismatch : public Error {
public:
  explicit BasisMismatch(const std::string &w)
      : Error(ErrorCategory::kInternal, "basis mismatch: " + w) {}
};

// A resolvent denominator that must be strictly positive was not.
class ResolventSingular : public Error {
public:
  explicit ResolventSingular(const std::string &w)
      : Error(ErrorCategory::kInternal, "resolvent singular: " + w) {}
};

} // namespace casmom
