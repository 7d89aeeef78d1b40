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

// Translation-invariant single-particle density matrices on a periodic 1D
// lattice of N sites, spacing dx = L / N. The density is stored through its
// correlation function C(s_m), s_m = m dx, so that rho(x_a, x_b) =
// C(x_a - x_b) dx. Plane waves exp(i k_n x) with k_n = 2 pi n / L are its
// eigenvectors and the eigenvalues are lambda(k_n) = dx sum_m C(s_m)
// exp(-i k_n s_m).

#ifndef ENTANGLE_HOMOGENEOUS_HPP
#define ENTANGLE_HOMOGENEOUS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entangle/linalg.hpp"

namespace entangle {

inline constexpr double kCorrelationTol = 1e-10;
inline constexpr double kImagResidueTol = 1e-10;
inline constexpr double kSpectrumSumTol = 1e-9;
/// Lambda mass allowed within kZoneEdgeBins of +-k_max before a precision
/// warning is attached.
inline constexpr double kZoneEdgeMass = 1e-8;
inline constexpr std::size_t kZoneEdgeBins = 10;

class HomogeneousState {
 public:
  /// Throws ValidationError naming the violated invariant: N < 2 or odd,
  /// L <= 0, C(-s) != C(s)^*, or L C(0) != 1 (all at 1e-10).
  static HomogeneousState from_correlation(std::vector<cplx> values, double box_length);

  std::size_t n_sites() const noexcept { return corr_.size(); }
  double box_length() const noexcept { return box_length_; }
  double spacing() const noexcept { return box_length_ / static_cast<double>(corr_.size()); }
  std::span<const cplx> correlation() const noexcept { return corr_; }

 private:
  HomogeneousState(std::vector<cplx> corr, double box_length)
      : corr_(std::move(corr)), box_length_(box_length) {}

  std::vector<cplx> corr_;
  double box_length_ = 1.0;
};

/// Density-matrix eigenvalues on the momentum grid k_n, n = -N/2 .. N/2-1.
class SpectralDistribution {
 public:
  /// Validates lambda >= -1e-10 and sum lambda = 1 within 1e-9. `dk` is the
  /// grid spacing 2 pi / L.
  static SpectralDistribution create(std::vector<double> k_values, std::vector<double> lambdas,
                                     double hbar, double dk);

  std::span<const double> k_values() const noexcept { return k_; }
  std::span<const double> lambdas() const noexcept { return lambda_; }
  double hbar() const noexcept { return hbar_; }
  double dk() const noexcept { return dk_; }
  std::size_t size() const noexcept { return k_.size(); }

  /// Set when more than 1e-8 of the lambda mass sits within 10 bins of the
  /// zone edge; moment comparisons against a continuum are then unreliable.
  const std::optional<std::string> &precision_warning() const noexcept { return warning_; }

  /// lambda / (hbar dk): continuum momentum-density estimate.
  std::vector<double> momentum_density() const;

 private:
  SpectralDistribution() = default;
  void refresh_warning();
  friend SpectralDistribution boost(const SpectralDistribution &, long);

  std::vector<double> k_;
  std::vector<double> lambda_;
  double hbar_ = 1.0;
  double dk_ = 1.0;
  std::optional<std::string> warning_;
};

/// Lattice momenta 2 pi n / L for n = -N/2 .. N/2-1.
std::vector<double> momentum_grid(std::size_t n_sites, double box_length);

/// Throws NumericalFailure if any eigenvalue keeps an imaginary part above
/// 1e-10 (a sign of broken Hermiticity upstream).
SpectralDistribution spectrum(const HomogeneousState &state, double hbar = 1.0);

/// sum_n (hbar k_n)^order lambda_n, order in [0, 4].
double momentum_moment(const SpectralDistribution &spec, int order);

/// sum_n (hbar k_n - <p>)^order lambda_n, order in [0, 4].
double central_moment(const SpectralDistribution &spec, int order);

/// sqrt(<p^2> - <p>^2). Variances in [-1e-12, 0) clamp to zero; anything
/// more negative throws NumericalFailure.
double occupation_stddev(const SpectralDistribution &spec);

double purity(const SpectralDistribution &spec);
bool is_pure(const SpectralDistribution &spec, double tol);

/// Cyclic shift of lambda by `shift_index` grid points (lambda'(k_n) =
/// lambda(k_{n - shift})).
SpectralDistribution boost(const SpectralDistribution &spec, long shift_index);

}  // namespace entangle

#endif  // ENTANGLE_HOMOGENEOUS_HPP
