// Copyright 2026 The entangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Analytic results for the electron of a hydrogen atom in the 1s state,
// viewed as one half of the entangled electron-proton pair.
//
// The atom's Hamiltonian is H = p_e^2 / 2m_e + p_p^2 / 2m_p - e^2 / |r_e - r_p|.
// It is not solved here; the known ground state
//   phi(r) = a0^{-3/2} exp(-r / a0) / sqrt(pi)
// of the relative motion is used directly. With the atom moving at total
// momentum P, tracing out the proton leaves a homogeneous electron density
// whose Fourier transform (times the box volume) is
//   Omega rho~(k) = 64 pi a0^3 / (1 + (a0 k)^2)^4.
// The fourth power is required by the unit-trace condition
// (2 pi)^-3 \int d^3k Omega rho~(k) = 1; the first power makes that integral
// diverge. The lab-frame momentum distribution is the rest-frame one shifted
// by (m_e / M) P, and its width is Delta p = hbar / a0.
//
// Internally everything is evaluated in units hbar = a0 = 1 and rescaled at
// the interface.

#ifndef ENTANGLE_HYDROGEN_HPP
#define ENTANGLE_HYDROGEN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace entangle::hydrogen {

using Vec3 = std::array<double, 3>;

/// CODATA proton-electron mass ratio.
inline constexpr double kProtonElectronMassRatio = 1836.15267;

struct HydrogenParams {
  double a0 = 1.0;
  double hbar = 1.0;
  double m_e = 1.0;
  double m_p = kProtonElectronMassRatio;
  Vec3 P = {0.0, 0.0, 0.0};

  /// Throws ValidationError on non-positive lengths, actions or masses.
  void validate() const;
  double total_mass() const noexcept { return m_e + m_p; }
  /// m_e m_p / M, i.e. 1/m_r = 1/m_e + 1/m_p.
  double reduced_mass() const noexcept { return m_e * m_p / (m_e + m_p); }
  /// (m_e / M) P: the shift of the electron momentum distribution.
  Vec3 electron_drift() const noexcept;
};

double psi_1s(double r, double a0 = 1.0);

/// \int d^3y phi(s + y) phi(y) = exp(-s/a0) (1 + s/a0 + s^2 / (3 a0^2)).
double autocorrelation_1s(double s, double a0 = 1.0);

/// Omega rho~_int(k) = 64 pi a0^3 / (1 + (a0 k)^2)^4.
double rho_tilde_int(double k, double a0 = 1.0);

/// (2 pi hbar)^-3 64 pi a0^3 / (1 + (a0 p / hbar)^2)^4.
double f_int(double p, double a0 = 1.0, double hbar = 1.0);

/// f_int(|p - (m_e / M) P|).
double f_lab(const Vec3 &p, const HydrogenParams &params);

/// hbar / a0.
double delta_p(const HydrogenParams &params);

/// sqrt(4 pi \int p^4 f_int(p) dp) by adaptive quadrature.
double delta_p_quadrature(const HydrogenParams &params);

/// Moments of f_lab evaluated by quadrature in lab coordinates, with the
/// axis along P (z if P = 0).
struct LabMoments {
  Vec3 mean{};                        ///< <p>
  double second_moment = 0.0;         ///< <|p|^2>
  double delta_p = 0.0;               ///< sqrt(<|p|^2> - |<p>|^2)
  std::array<double, 5> axial_central{};  ///< <(p_axis - <p_axis>)^n>, n = 0..4
  double norm = 0.0;                  ///< \int f_lab d^3p
};

LabMoments lab_frame_moments(const HydrogenParams &params);

inline constexpr double kTailMassWarning = 1e-3;

/// Midpoint-rule radial table of the rest-frame distribution: bins of width
/// dk on [0, k_max], weight_i = 4 pi k_i^2 dk / (2 pi)^3, so that
/// sum_i weight_i omega_rho_i (hbar k_i)^n approximates <p^n>.
struct RadialSpectrum {
  std::vector<double> k;
  std::vector<double> omega_rho;
  std::vector<double> f_p;
  std::vector<double> weight;
  double hbar = 1.0;
  double a0 = 1.0;
  double dk = 0.0;
  /// Analytic mass beyond k_max.
  double tail_mass = 0.0;
  std::optional<std::string> precision_warning;

  std::size_t size() const noexcept { return k.size(); }
  /// sum_i weight_i omega_rho_i (hbar k_i)^order.
  double weighted_moment(int order) const;
};

/// Throws ValidationError unless k_max > 0 and n_bins >= 16. A tail mass
/// above 1e-3 attaches a precision warning.
RadialSpectrum radial_spectrum_export(const HydrogenParams &params, double k_max,
                                      std::size_t n_bins);

/// Width of an isotropic 3D distribution: sqrt(<|p|^2>), the mean being zero.
double occupation_stddev(const RadialSpectrum &spec);

}  // namespace entangle::hydrogen

#endif  // ENTANGLE_HYDROGEN_HPP
