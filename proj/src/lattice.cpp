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

#include "entangle/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "entangle/error.hpp"

namespace entangle::lattice {

namespace {

// Returns round(x) if x is an integer to 1e-9, else nothing.
std::optional<long> as_integer(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) > 1e-9) return std::nullopt;
  return static_cast<long>(r);
}

long positive_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

LatticeTwoParticleState build_state(const LatticeParams &params) {
  const std::size_t n = params.n_sites;
  if (n < kMinSites || n > kMaxSites || n % 2 != 0) {
    throw ValidationError("lattice: n_sites must be even and in [" + std::to_string(kMinSites) +
                          ", " + std::to_string(kMaxSites) + "], got " + std::to_string(n));
  }
  if (!(params.box_length > 0.0) || !std::isfinite(params.box_length)) {
    throw ValidationError("lattice: box_length must be positive");
  }
  if (!(params.decay > 0.0) || !std::isfinite(params.decay)) {
    throw ValidationError("lattice: decay must be positive");
  }
  if (!(params.mass_ratio > 0.0) || !std::isfinite(params.mass_ratio)) {
    throw ValidationError("lattice: mass_ratio must be positive");
  }

  const double c = static_cast<double>(params.com_index);
  const auto electron = as_integer(c / (1.0 + params.mass_ratio));
  const auto proton = as_integer(c * params.mass_ratio / (1.0 + params.mass_ratio));
  if (!electron || !proton) {
    std::ostringstream os;
    os << "lattice: centre-of-mass index " << params.com_index << " with mass ratio "
       << params.mass_ratio
       << " is not periodic in the box: both (m_e/M)*com_index = " << c / (1.0 + params.mass_ratio)
       << " and (m_p/M)*com_index = " << c * params.mass_ratio / (1.0 + params.mass_ratio)
       << " must be integers";
    throw ValidationError(os.str());
  }

  const long ni = static_cast<long>(n);
  const double dx = params.spacing();
  std::vector<double> phi(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double dist = static_cast<double>(std::min(m, n - m)) * dx;
    phi[m] = std::exp(-dist / params.decay);
  }
  std::vector<cplx> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(angle), std::sin(angle)};
  }

  ComplexMatrix d(n, n);
  for (long i = 0; i < ni; ++i) {
    for (long j = 0; j < ni; ++j) {
      const auto sep = static_cast<std::size_t>(positive_mod(i - j, ni));
      const auto phase = static_cast<std::size_t>(positive_mod(*electron * i + *proton * j, ni));
      d(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = phi[sep] * twiddle[phase];
    }
  }
  return {params, *electron, *proton, PureBipartiteState::normalized(std::move(d))};
}

HomogeneousState reduced_electron_correlation(const LatticeTwoParticleState &state) {
  const auto rho = reduce_u(state.state);
  const auto &m = rho.matrix();
  const std::size_t n = m.rows();
  const double dx = state.params.spacing();

  std::vector<cplx> corr(n);
  for (std::size_t s = 0; s < n; ++s) {
    cplx sum{};
    for (std::size_t k = 0; k < n; ++k) sum += m((k + s) % n, k);
    corr[s] = sum / (static_cast<double>(n) * dx);
  }
  double worst = 0.0;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(m((k + s) % n, k) / dx - corr[s]));
  if (worst > 1e-10) {
    throw NumericalFailure("lattice: reduced electron density is not translation invariant "
                           "(deviation " + std::to_string(worst) + ")");
  }
  return HomogeneousState::from_correlation(std::move(corr), state.params.box_length);
}

ConsistencyReport cross_check(const LatticeTwoParticleState &state, double hbar,
                              double rank_tol) {
  const auto dec = schmidt(state.state, rank_tol);
  auto spec = spectrum(reduced_electron_correlation(state), hbar);

  std::vector<double> dft(spec.lambdas().begin(), spec.lambdas().end());
  std::sort(dft.begin(), dft.end(), std::greater<>());
  double dev = 0.0;
  for (std::size_t i = 0; i < dft.size(); ++i) {
    const double s = i < dec.lambdas.size() ? dec.lambdas[i] : 0.0;
    dev = std::max(dev, std::abs(s - dft[i]));
  }
  return {dec.lambdas, std::move(spec), dev};
}

bool well_resolved(const LatticeParams &params) {
  const double lo = 4.0 * params.spacing();
  const double hi = params.box_length / 8.0;
  return params.decay >= lo * (1.0 - 1e-12) && params.decay <= hi * (1.0 + 1e-12);
}

std::vector<ScanRow> entanglement_vs_decay_scan(const LatticeParams &base,
                                                const std::vector<double> &decays, double hbar,
                                                double rank_tol, unsigned threads) {
  std::vector<ScanRow> rows(decays.size());
  auto compute = [&](std::size_t i) {
    LatticeParams p = base;
    p.decay = decays[i];
    const auto st = build_state(p);
    const auto dec = schmidt(st.state, rank_tol);
    const auto rep = entanglement_report(dec, rank_tol);
    const auto spec = spectrum(reduced_electron_correlation(st), hbar);
    rows[i] = {p.decay, rep.schmidt_rank, rep.purity, rep.entropy, occupation_stddev(spec),
               well_resolved(p)};
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, decays.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < decays.size(); ++i) compute(i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < decays.size(); i = next++) {
          try {
            compute(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace entangle::lattice
