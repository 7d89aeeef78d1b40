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

#include "entangle/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entangle/error.hpp"
#include "entangle/quadrature.hpp"

namespace entangle::hydrogen {

namespace {

constexpr double kPi = std::numbers::pi;

// Rest-frame momentum density in units hbar = a0 = 1: 8 / (pi^2 (1 + q^2)^4).
double f_scaled(double q) {
  const double den = 1.0 + q * q;
  const double den2 = den * den;
  return 8.0 / (kPi * kPi * den2 * den2);
}

double norm3(const Vec3 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

void require_positive(double v, const char *name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(std::string("HydrogenParams: ") + name + " must be positive");
  }
}

const quad::Options kMomentOptions{1e-13, 1e-11, 20000};

}  // namespace

void HydrogenParams::validate() const {
  require_positive(a0, "a0");
  require_positive(hbar, "hbar");
  require_positive(m_e, "m_e");
  require_positive(m_p, "m_p");
  for (double c : P) {
    if (!std::isfinite(c)) throw ValidationError("HydrogenParams: P must be finite");
  }
}

Vec3 HydrogenParams::electron_drift() const noexcept {
  const double ratio = m_e / total_mass();
  return {ratio * P[0], ratio * P[1], ratio * P[2]};
}

double psi_1s(double r, double a0) {
  return std::exp(-r / a0) / (std::sqrt(kPi) * a0 * std::sqrt(a0));
}

double autocorrelation_1s(double s, double a0) {
  const double x = s / a0;
  return std::exp(-x) * (1.0 + x + x * x / 3.0);
}

double rho_tilde_int(double k, double a0) {
  const double x = a0 * k;
  const double den = 1.0 + x * x;
  const double den2 = den * den;
  return 64.0 * kPi * a0 * a0 * a0 / (den2 * den2);
}

double f_int(double p, double a0, double hbar) {
  const double scale = a0 / hbar;
  return scale * scale * scale * f_scaled(p * scale);
}

double f_lab(const Vec3 &p, const HydrogenParams &params) {
  const Vec3 drift = params.electron_drift();
  const Vec3 rel = {p[0] - drift[0], p[1] - drift[1], p[2] - drift[2]};
  return f_int(norm3(rel), params.a0, params.hbar);
}

double delta_p(const HydrogenParams &params) {
  params.validate();
  return params.hbar / params.a0;
}

double delta_p_quadrature(const HydrogenParams &params) {
  params.validate();
  auto integrand = [](double q) { return 4.0 * kPi * q * q * q * q * f_scaled(q); };
  const double second = quad::integrate_to_infinity(integrand, 0.0, kMomentOptions).value;
  return std::sqrt(second) * params.hbar / params.a0;
}

LabMoments lab_frame_moments(const HydrogenParams &params) {
  params.validate();
  const Vec3 drift = params.electron_drift();
  const double unit = params.hbar / params.a0;
  const double d = norm3(drift) / unit;

  // Spherical coordinates about the lab origin with the axis along the drift;
  // g(q, mu) is the moment weight, q the scaled momentum magnitude.
  auto moment = [d](auto g) {
    auto radial = [&](double q) {
      auto angular = [&](double mu) {
        const double dist2 = std::max(q * q + d * d - 2.0 * q * d * mu, 0.0);
        return g(q, mu) * f_scaled(std::sqrt(dist2));
      };
      const double inner = quad::integrate(angular, -1.0, 1.0, kMomentOptions).value;
      return 2.0 * kPi * q * q * inner;
    };
    double total = 0.0;
    if (d > 0.0) total += quad::integrate(radial, 0.0, d, kMomentOptions).value;
    total += quad::integrate_to_infinity(radial, d, kMomentOptions).value;
    return total;
  };

  LabMoments out;
  out.norm = moment([](double, double) { return 1.0; });
  const double axial_mean = moment([](double q, double mu) { return q * mu; });
  out.second_moment = moment([](double q, double) { return q * q; }) * unit * unit;
  for (int n = 0; n <= 4; ++n) {
    out.axial_central[static_cast<std::size_t>(n)] =
        moment([&](double q, double mu) { return std::pow(q * mu - axial_mean, n); }) *
        std::pow(unit, n);
  }

  const double dn = norm3(drift);
  for (std::size_t i = 0; i < 3; ++i) {
    out.mean[i] = dn > 0.0 ? axial_mean * unit * drift[i] / dn : 0.0;
  }
  const double var = out.second_moment - (axial_mean * unit) * (axial_mean * unit);
  out.delta_p = var > 0.0 ? std::sqrt(var) : 0.0;
  return out;
}

double RadialSpectrum::weighted_moment(int order) const {
  double s = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    s += weight[i] * omega_rho[i] * std::pow(hbar * k[i], order);
  }
  return s;
}

RadialSpectrum radial_spectrum_export(const HydrogenParams &params, double k_max,
                                      std::size_t n_bins) {
  params.validate();
  if (!(k_max > 0.0) || !std::isfinite(k_max)) {
    throw ValidationError("radial_spectrum_export: k_max must be positive");
  }
  if (n_bins < 16) throw ValidationError("radial_spectrum_export: n_bins must be at least 16");

  RadialSpectrum out;
  out.hbar = params.hbar;
  out.a0 = params.a0;
  out.dk = k_max / static_cast<double>(n_bins);
  out.k.resize(n_bins);
  out.omega_rho.resize(n_bins);
  out.f_p.resize(n_bins);
  out.weight.resize(n_bins);
  const double measure = 4.0 * kPi / (8.0 * kPi * kPi * kPi);
  for (std::size_t i = 0; i < n_bins; ++i) {
    const double k = (static_cast<double>(i) + 0.5) * out.dk;
    out.k[i] = k;
    out.omega_rho[i] = rho_tilde_int(k, params.a0);
    out.f_p[i] = f_int(params.hbar * k, params.a0, params.hbar);
    out.weight[i] = measure * k * k * out.dk;
  }

  auto tail = [](double q) { return 4.0 * kPi * q * q * f_scaled(q); };
  out.tail_mass = quad::integrate_to_infinity(tail, k_max * params.a0, kMomentOptions).value;
  if (out.tail_mass > kTailMassWarning) {
    std::ostringstream os;
    os << "k_max = " << k_max << " leaves tail mass " << out.tail_mass
       << " > 1e-3 outside the table";
    out.precision_warning = os.str();
  }
  return out;
}

double occupation_stddev(const RadialSpectrum &spec) {
  const double second = spec.weighted_moment(2);
  return second > 0.0 ? std::sqrt(second) : 0.0;
}

}  // namespace entangle::hydrogen
