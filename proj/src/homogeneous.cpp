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

#include "entangle/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entangle/error.hpp"

namespace entangle {

HomogeneousState HomogeneousState::from_correlation(std::vector<cplx> values,
                                                    double box_length) {
  const std::size_t n = values.size();
  if (n < 2) throw ValidationError("HomogeneousState: need at least 2 sites");
  if (n % 2 != 0) throw ValidationError("HomogeneousState: number of sites must be even");
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ValidationError("HomogeneousState: box length must be positive");
  }
  for (const auto &z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("HomogeneousState: non-finite correlation value");
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    const double defect = std::abs(values[(n - m) % n] - std::conj(values[m]));
    if (defect > kCorrelationTol) {
      std::ostringstream os;
      os << "HomogeneousState: Hermiticity invariant C(-s) = C(s)* violated at separation index "
         << m << " (defect " << defect << ")";
      throw ValidationError(os.str());
    }
  }
  const double tr = box_length * values[0].real();
  if (std::abs(tr - 1.0) > kCorrelationTol) {
    std::ostringstream os;
    os.precision(15);
    os << "HomogeneousState: unit-trace invariant L*C(0) = 1 violated (got " << tr << ")";
    throw ValidationError(os.str());
  }
  return HomogeneousState(std::move(values), box_length);
}

SpectralDistribution SpectralDistribution::create(std::vector<double> k_values,
                                                  std::vector<double> lambdas, double hbar,
                                                  double dk) {
  if (k_values.size() != lambdas.size() || lambdas.empty()) {
    throw ValidationError("SpectralDistribution: k grid and lambda lengths differ");
  }
  if (!(hbar > 0.0)) throw ValidationError("SpectralDistribution: hbar must be positive");
  if (!(dk > 0.0)) throw ValidationError("SpectralDistribution: dk must be positive");
  double sum = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] >= -1e-10)) {
      throw ValidationError("SpectralDistribution: non-negativity violated at k = " +
                            std::to_string(k_values[i]));
    }
    sum += lambdas[i];
  }
  if (std::abs(sum - 1.0) > kSpectrumSumTol) {
    std::ostringstream os;
    os.precision(15);
    os << "SpectralDistribution: unit-sum invariant violated (sum lambda = " << sum << ")";
    throw ValidationError(os.str());
  }
  SpectralDistribution s;
  s.k_ = std::move(k_values);
  s.lambda_ = std::move(lambdas);
  s.hbar_ = hbar;
  s.dk_ = dk;
  s.refresh_warning();
  return s;
}

void SpectralDistribution::refresh_warning() {
  const std::size_t n = lambda_.size();
  const std::size_t edge = std::min(kZoneEdgeBins, n / 2);
  double mass = 0.0;
  for (std::size_t i = 0; i < edge; ++i) mass += std::abs(lambda_[i]) + std::abs(lambda_[n - 1 - i]);
  if (mass > kZoneEdgeMass) {
    std::ostringstream os;
    os << "lambda mass " << mass << " within " << edge
       << " bins of the zone edge; continuum moments are unreliable";
    warning_ = os.str();
  } else {
    warning_.reset();
  }
}

std::vector<double> SpectralDistribution::momentum_density() const {
  std::vector<double> f(lambda_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = lambda_[i] / (hbar_ * dk_);
  return f;
}

std::vector<double> momentum_grid(std::size_t n_sites, double box_length) {
  if (n_sites < 2 || n_sites % 2 != 0) {
    throw ValidationError("momentum_grid: N must be even and >= 2, got " + std::to_string(n_sites));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ValidationError("momentum_grid: box length must be positive and finite");
  }
  std::vector<double> k(n_sites);
  const long half = static_cast<long>(n_sites / 2);
  for (std::size_t i = 0; i < n_sites; ++i) {
    const long n = static_cast<long>(i) - half;
    k[i] = 2.0 * std::numbers::pi * static_cast<double>(n) / box_length;
  }
  return k;
}

SpectralDistribution spectrum(const HomogeneousState &state, double hbar) {
  const std::size_t n = state.n_sites();
  const auto corr = state.correlation();
  const double dx = state.spacing();

  std::vector<cplx> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(angle), -std::sin(angle)};
  }

  std::vector<double> lambdas(n);
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    // Row i holds n = i - N/2; reduce it mod N for the twiddle index.
    const std::size_t nmod = (i + n - half) % n;
    cplx s{};
    for (std::size_t m = 0; m < n; ++m) s += corr[m] * twiddle[(nmod * m) % n];
    s *= dx;
    if (std::abs(s.imag()) > kImagResidueTol) {
      std::ostringstream os;
      os << "spectrum: eigenvalue has imaginary part " << s.imag()
         << " (correlation function is not Hermitian)";
      throw NumericalFailure(os.str());
    }
    lambdas[i] = s.real();
  }
  return SpectralDistribution::create(momentum_grid(n, state.box_length()), std::move(lambdas),
                                      hbar, 2.0 * std::numbers::pi / state.box_length());
}

double momentum_moment(const SpectralDistribution &spec, int order) {
  if (order < 0 || order > 4) throw ValidationError("momentum_moment: order must be in [0, 4]");
  const auto k = spec.k_values();
  const auto lam = spec.lambdas();
  double s = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) s += std::pow(spec.hbar() * k[i], order) * lam[i];
  return s;
}

double central_moment(const SpectralDistribution &spec, int order) {
  if (order < 0 || order > 4) throw ValidationError("central_moment: order must be in [0, 4]");
  const double mean = momentum_moment(spec, 1);
  const auto k = spec.k_values();
  const auto lam = spec.lambdas();
  double s = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i)
    s += std::pow(spec.hbar() * k[i] - mean, order) * lam[i];
  return s;
}

double occupation_stddev(const SpectralDistribution &spec) {
  const double mean = momentum_moment(spec, 1);
  const double var = momentum_moment(spec, 2) - mean * mean;
  if (var < -1e-12) {
    throw NumericalFailure("occupation_stddev: negative variance " + std::to_string(var));
  }
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

double purity(const SpectralDistribution &spec) {
  double s = 0.0;
  for (double l : spec.lambdas()) s += l * l;
  return s;
}

bool is_pure(const SpectralDistribution &spec, double tol) {
  return std::abs(purity(spec) - 1.0) <= tol;
}

SpectralDistribution boost(const SpectralDistribution &spec, long shift_index) {
  const long n = static_cast<long>(spec.size());
  const long shift = ((shift_index % n) + n) % n;
  SpectralDistribution out = spec;
  for (long i = 0; i < n; ++i) {
    out.lambda_[static_cast<std::size_t>((i + shift) % n)] = spec.lambda_[static_cast<std::size_t>(i)];
  }
  out.refresh_warning();
  return out;
}

}  // namespace entangle
