// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/response.hpp"

#include <cmath>
#include <string>

#include "casmom/errors.hpp"

namespace casmom {

namespace {

using Cd = std::complex<double>;
constexpr Cd kI{0.0, 1.0};

void check_off_pole(double omega, double pole, const char *what) {
  if (std::abs(omega - pole) < 1e-9 * pole)
    throw OnResonance(std::string(what) + " evaluated at omega = " +
                      std::to_string(omega) + ", within 1e-9 of the pole at " +
                      std::to_string(pole));
}

Eigen::Matrix3cd skew(const Eigen::Vector3d &b) {
  Eigen::Matrix3cd s = Eigen::Matrix3cd::Zero();
  s(0, 1) = -b.z();
  s(0, 2) = b.y();
  s(1, 0) = b.z();
  s(1, 2) = -b.x();
  s(2, 0) = -b.y();
  s(2, 1) = b.x();
  return s;
}

} // namespace

std::complex<double> polarizability(Polarizability kind, double omega,
                                    const ModelParams &p) {
  if (omega < 0.0)
    throw NonPositiveInput("polarizability frequency must be >= 0, got " +
                           std::to_string(omega));
  const AnisotropySet a = anisotropy(p);
  const double w0 = p.omega_0;
  const double w = omega;
  const double w0sq = w0 * w0, wsq = w * w;
  const double e = p.e, hbar = p.hbar;
  const double mu = p.mu, mus = p.mu_star;

  switch (kind) {
  case Polarizability::kE:
    check_off_pole(w, w0, "alpha_E");
    return e * e / (mu * (w0sq - wsq));
  case Polarizability::kM:
    check_off_pole(w, 2.0 * w0, "alpha_M");
    return 4.0 * e * e * hbar * w0 * a.N_xyz /
           (9.0 * mus * mus * (4.0 * w0sq - wsq));
  case Polarizability::kChi:
    check_off_pole(w, w0, "chi");
    return std::pow(e, 3) / (mu * mus * std::pow(w0sq - wsq, 2));
  case Polarizability::kZeta: {
    check_off_pole(w, 2.0 * w0, "zeta");
    if (w < 1e-300)
      throw OnResonance("zeta diverges at omega -> 0");
    return std::pow(e, 3) * hbar * w0 * (4.0 * w0sq - 3.0 * wsq) * a.N_xyz /
           (18.0 * std::pow(mus, 3) * w * std::pow(4.0 * w0sq - wsq, 2));
  }
  case Polarizability::kBeta: {
    check_off_pole(w, w0, "beta");
    check_off_pole(w, 2.0 * w0, "beta");
    const double D = (wsq - w0sq) * (wsq - 4.0 * w0sq);
    return -2.0 * e * e * hbar * p.C * std::pow(w0, 3) *
           (wsq * wsq + 7.0 * w0sq * wsq + 4.0 * w0sq * w0sq) * a.M_xyz /
           (mu * mu * mus * std::pow(D, 3));
  }
  case Polarizability::kGamma: {
    check_off_pole(w, w0, "gamma");
    check_off_pole(w, 2.0 * w0, "gamma");
    const double D = (wsq - w0sq) * (wsq - 4.0 * w0sq);
    return std::pow(e, 3) * hbar * p.C * std::pow(w0, 3) * wsq *
           (wsq + 12.0 * w0sq) * a.M_xyz /
           (mu * mu * mus * mus * std::pow(D, 3));
  }
  case Polarizability::kXi: {
    check_off_pole(w, w0, "xi");
    check_off_pole(w, 2.0 * w0, "xi");
    const double num = 19.0 * std::pow(wsq, 3) - 842.0 * wsq * wsq * w0sq -
                       224.0 * wsq * w0sq * w0sq -
                       672.0 * std::pow(w0sq, 3);
    return -2.0 * std::pow(e, 3) * hbar * p.C * a.M_xyz * std::pow(w0, 3) *
           w * num /
           (15.0 * mu * mu * mus * mus * std::pow(wsq - w0sq, 3) *
            std::pow(wsq - 4.0 * w0sq, 5));
  }
  }
  throw NonPositiveInput("unknown polarizability kind");
}

ResponseSet response_at(const Eigen::Vector3d &k, double omega,
                        const ModelParams &p) {
  ResponseSet r;
  r.alpha_E = polarizability(Polarizability::kE, omega, p);
  r.alpha_M = polarizability(Polarizability::kM, omega, p);
  r.chi = polarizability(Polarizability::kChi, omega, p);
  // zeta is singular at omega = 0; the static tensors below do not use it.
  r.zeta = (omega > 0.0) ? polarizability(Polarizability::kZeta, omega, p)
                         : Cd(0.0, 0.0);
  r.beta = polarizability(Polarizability::kBeta, omega, p);
  r.gamma = polarizability(Polarizability::kGamma, omega, p);
  r.xi = polarizability(Polarizability::kXi, omega, p);

  const double b0k = p.B0.dot(k);
  const Eigen::Matrix3cd I = Eigen::Matrix3cd::Identity();
  const Eigen::Matrix3cd B0x = skew(p.B0);

  r.alpha_EE = (r.alpha_E + 0.5 * r.xi * b0k) * I +
               0.5 * r.xi * (k * p.B0.transpose()).cast<Cd>() -
               kI * omega * r.chi * B0x;
  r.alpha_EM = kI * omega * r.beta * I + r.gamma * B0x;

  r.alpha_nr = (omega > 0.0)
                   ? (0.5 * r.xi.real() - r.gamma.real() / omega) * b0k
                   : 0.0;
  return r;
}

Eigen::Vector3cd induced_dipole(const Eigen::Vector3cd &E_free,
                                const Eigen::Vector3cd &B_free,
                                const Eigen::Vector3d &k, double omega,
                                const ModelParams &p) {
  const ResponseSet r = response_at(k, omega, p);
  return r.alpha_EE * E_free + r.alpha_EM * B_free;
}

Eigen::Vector3cd induced_dipole(const Eigen::Vector3cd &E_free,
                                const Eigen::Vector3d &k, double omega,
                                const ModelParams &p) {
  if (omega <= 0.0)
    throw NonPositiveInput("on-shell dipole needs omega > 0");
  const double kc = k.norm() * p.c;
  if (std::abs(kc - omega) > 1e-9 * omega)
    throw OffShell("|k| c = " + std::to_string(kc) + " vs omega = " +
                   std::to_string(omega));
  const Eigen::Vector3cd B = k.cast<Cd>().cross(E_free) / omega;
  return induced_dipole(E_free, B, k, omega, p);
}

double alpha_nr(const Eigen::Vector3d &k, double omega, const ModelParams &p) {
  if (omega <= 0.0)
    throw NonPositiveInput("alpha_nr needs omega > 0");
  const double xi = polarizability(Polarizability::kXi, omega, p).real();
  const double ga = polarizability(Polarizability::kGamma, omega, p).real();
  return (0.5 * xi - ga / omega) * p.B0.dot(k);
}

double delta_n_mch(double rho, const Eigen::Vector3d &k, double omega,
                   const ModelParams &p) {
  if (rho < 0.0)
    throw NonPositiveInput("number density must be >= 0");
  return rho * alpha_nr(k, omega, p) / p.eps0;
}

namespace detail {

std::complex<double> nonreciprocal_combo_x(std::complex<double> x,
                                           double eps) {
  // Scale-free form of (xi/2 - gamma/omega) divided by u, as a rational
  // function of x = u^2 with the retarded shift w0^2 -> w0^2 (1 - i eps):
  //   gamma/(u omega) -> (x + 12) / (z1^3 z2^3)
  //   xi/(2u)         -> -(1/15) (19x^3 - 842x^2 - 224x - 672) / (z1^3 z2^5)
  // where z1 = x - 1 + i eps and z2 = x - 4 + 4 i eps, all in units of
  // e^3 hbar C M_xyz / (w0^6 mu^2 mu*^2).
  const Cd z1 = x - Cd(1.0, -eps);
  const Cd z2 = x - Cd(4.0, -4.0 * eps);
  const Cd z1_3 = z1 * z1 * z1;
  const Cd z2_3 = z2 * z2 * z2;
  const Cd gamma_term = (x + 12.0) / (z1_3 * z2_3);
  const Cd xi_term = -(1.0 / 15.0) *
                     (((19.0 * x - 842.0) * x - 224.0) * x - 672.0) /
                     (z1_3 * z2_3 * z2 * z2);
  return xi_term - gamma_term;
}

std::complex<double> nonreciprocal_combo_scaled(double u, double eps) {
  return u * nonreciprocal_combo_x(Cd(u * u, 0.0), eps);
}

} // namespace detail

} // namespace casmom
