// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Perturbative-QED route to the vacuum momentum of the chiral oscillator.
//
// Transverse part: one virtual transverse photon, evaluated numerically as a
// resolvent contraction over the dressed oscillator basis (p_perp_fock) and
// analytically from the rotationally averaged closed form (p_perp_rot).
// Longitudinal part: closed forms for a fixed molecular orientation
// (p_par_fixed) and after orientation averaging (p_par_rot).
// p_cas_total combines the pieces and cross-checks the printed condensed
// form against the sum of its parts; p_cas_optical re-expresses the total
// through the static optical parameters beta(0)/alpha_E(0).

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "casmom/fock.hpp"
#include "casmom/params.hpp"
#include "casmom/quadrature.hpp"

namespace casmom {

//------------------------------------------------------------------------------
// Photon-momentum kernel integrals
//------------------------------------------------------------------------------

// Arguments of the radial k-integrals: two bound-state transition energies
// measured from the reference level (strictly negative, so the integrand has
// no pole), the recoil mass in the kinetic energy E_k = hbar^2 k^2 / (2 mass),
// and an optional hard cutoff (k_max = 0 integrates to infinity).
struct KernelArgs {
  double E1 = -1.0;
  double E2 = -1.0;
  double mass = 1.0;
  double k_max = 0.0;
  double hbar = 1.0;
};

// int_0^{k_max} k^3 dk [ 1/((E_k - E1)(E_k - E2)^2) + (E1 <-> E2) ] by
// adaptive quadrature (compactified tail for k_max = infinity).
// Throws NonNegativeTransitionEnergy unless E1, E2 < 0.
double kernel_integral_numeric(const KernelArgs &a,
                               const AdaptiveSpec &spec = {});

// Closed form of the same integral,
//   2 mass^2/hbar^4 * log(|E1|/|E2|) / (|E1| - |E2|),
// with the equal-argument limit 2 mass^2/hbar^4 * 1/|E1|.  The magnitudes
// make the formula agree with the numeric integral; measuring the energies
// with the opposite sign convention (excitation energies) gives the same
// expression without the bars.
double kernel_integral_log(const KernelArgs &a);

//------------------------------------------------------------------------------
// Transverse momentum, resolvent route
//------------------------------------------------------------------------------

// Photon-momentum quadrature grid: Gauss-Legendre panels between log-spaced
// edges.  The default edge set spans 1e-7 .. 1e4 (internal units) with extra
// edges around the trap scale; it resolves both the k ~ w0 transition region
// and the k ~ 1 recoil region.
struct KGridSpec {
  std::vector<double> edges;    // empty => default_k_edges(p)
  int points_per_panel = 30;
  // Re-contract on a coarser per-panel rule and require agreement.
  bool check_convergence = true;
  double rel_tol = 1e-3;
};

std::vector<double> default_k_edges(const ModelParams &p, double k_max = 0.0);

// Transverse vacuum momentum from the one-photon resolvent contraction over
// the dressed basis.
//
// For each photon momentum k the angular integral over photon directions and
// transverse polarizations is done analytically, leaving the contraction
//   k^3 * Re[ 4*S1_a - S2_a - S3_a ] / 15,
//   S1_a = sum_i M_{i a i},  S2_a = sum_j M_{a j j},  S3_a = sum_i M_{i i a},
//   M_{i b j} = <G| v_i R^2 p_b R v_j |G>,
// with R = (hbar^2 k^2/2 m_e + hbar c k - E_g + H)^{-1}, vertex
// v = p + (e/2) B0 x r, H the dressed Hamiltonian, |G> its ground state and
// E_g its ground energy (so the photon-only channel keeps a strictly
// positive denominator at every k).  The O(C*B0) part is isolated by mixed
// sign-symmetrised finite differences over (C, B0) - four diagonalisations -
// which removes even-order contamination exactly.
//
// Throws QuadratureNotConverged (grid check), ResolventSingular (non-positive
// denominator), NonPositiveInput (n_max < 8), PerturbationTooLarge
// (couplings beyond 1e-2).
Eigen::Vector3d p_perp_fock(const ModelParams &p, const FockBasis &basis,
                            const KGridSpec &kq = {});

// Size estimate for the denominator term (hbar mu / 2 mu* m_e)(r x k).B0
// that the resolvent evaluation drops: rms of the term over the ground state
// (worst-case photon direction), relative to the smallest retained
// denominator at this k.
double doppler_term_bound(const ModelParams &p, double k);

//------------------------------------------------------------------------------
// Closed forms
//------------------------------------------------------------------------------

// Rotationally averaged transverse momentum, exact-bracket form:
//   [20736 ln(4/3) - 12928 ln 2 - 14511]/93312
//     * C e^3 M_xyz / (pi^2 c eps0 m_e^2 wx wy wz) * B0.
Eigen::Vector3d p_perp_rot(const ModelParams &p);

// The same expression with the printed approximate constant -1.06/144 in
// place of the exact bracket.  The two printed constants disagree by ~25x;
// both are exposed so the resolvent route can arbitrate (see the acceptance
// suite's verdict output).
Eigen::Vector3d p_perp_rot_approx(const ModelParams &p);

// Exact value of the bracket constant divided by 93312.
double p_perp_bracket_constant();

// Longitudinal momentum at fixed molecular orientation:
//   C e^3 ln(m_N/m_e) / (96 pi^2 c eps0 mu mu* (wx+wy+wz))
//     * sum_{jk} eps_{ijk} B0_i eta[k][j]/(w_k w_j)  on component i.
Eigen::Vector3d p_par_fixed(const ModelParams &p);

// Orientation-averaged longitudinal momentum:
//   C e^3 ln(m_e/m_N) M_xyz / (144 pi^2 c eps0 mu mu* wx wy wz) * B0.
Eigen::Vector3d p_par_rot(const ModelParams &p);

//------------------------------------------------------------------------------
// Rotational averaging
//------------------------------------------------------------------------------

struct RotationGrid {
  int n_alpha = 16; // trapezoid points in the first Euler angle
  int n_beta = 12;  // Gauss-Legendre points in cos(beta)
  int n_gamma = 16; // trapezoid points in the third Euler angle
  bool check_refinement = true;
  double rel_tol = 1e-6;
};

// Haar average over SO(3) of an orientation-indexed vector function
// (f receives the rotation matrix mapping molecular axes to lab axes).
// Throws GridTooCoarse when a refined grid moves the result beyond rel_tol.
Eigen::Vector3d
rotational_average(const std::function<Eigen::Vector3d(const Eigen::Matrix3d &)> &f,
                   const RotationGrid &grid = {});

// Shortcut for explicit linear-response tensors: (tr T / 3) B0.
Eigen::Vector3d rotational_average_tensor(const Eigen::Matrix3d &T,
                                          const Eigen::Vector3d &B0);

//------------------------------------------------------------------------------
// Combined report
//------------------------------------------------------------------------------

struct CasimirReport {
  Eigen::Vector3d P_perp = Eigen::Vector3d::Zero();
  Eigen::Vector3d P_par = Eigen::Vector3d::Zero();
  Eigen::Vector3d P_total = Eigen::Vector3d::Zero();   // printed condensed form
  Eigen::Vector3d P_kin = Eigen::Vector3d::Zero();     // -P_total (start at rest)
  Eigen::Vector3d P_optical = Eigen::Vector3d::Zero(); // optical-parameter form
  Eigen::Vector3d P_Abr = Eigen::Vector3d::Zero();     // e B0 x <r> = 0
  double l_ch = 0.0; // chiral length |beta(0)/alpha_E(0)|

  // Consistency matrix across the three printed conventions for the total
  // (condensed form, perp+par sum, optical form): relative residuals of the
  // scalar coefficients along B0.  Reported, not asserted (the printed
  // conventions disagree; see the acceptance-suite output).
  double resid_total_vs_sum = 0.0;
  double resid_total_vs_optical = 0.0;
  double resid_sum_vs_optical = 0.0;

  std::string method_perp;
  std::string method_par;
  std::string provenance; // numeric settings (deterministic text)
};

// Builds the combined analytic report: P_perp from the exact bracket,
// P_par from the orientation average, P_total from the condensed printed
// form C e^3 [ln(m_e/m_N)+1] M_xyz/(144 pi^2 c eps0 mu mu* wx wy wz) B0,
// P_kin = -P_total, and the optical form.
CasimirReport p_cas_total(const ModelParams &p);

// Optical-parameter form of the orientation-averaged total momentum:
//   (2 alpha_fs / 9 pi) (beta(0)/alpha_E(0)) [ln(m_N/m_e) + 1] e B0.
Eigen::Vector3d p_cas_optical(const ModelParams &p);

} // namespace casmom
