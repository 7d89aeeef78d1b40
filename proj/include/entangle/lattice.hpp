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

// A 1D two-particle "hydrogen" on a periodic lattice: electron and proton each
// live on N sites, bound by phi(x) = exp(-|x| / a) in the relative coordinate
// and carrying a plane wave of momentum K = 2 pi com_index / L in the centre
// of mass. The pair state is the bipartite coefficient matrix
//   d_ij ∝ phi(x_i - x_j) exp(i K (m_e x_i + m_p x_j) / M),
// with |x| the periodic (minimum-image) distance.

#ifndef ENTANGLE_LATTICE_HPP
#define ENTANGLE_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entangle/bipartite.hpp"
#include "entangle/homogeneous.hpp"

namespace entangle::lattice {

inline constexpr std::size_t kMinSites = 8;
inline constexpr std::size_t kMaxSites = 1024;

struct LatticeParams {
  std::size_t n_sites = 64;
  double box_length = 40.0;
  double decay = 1.0;
  long com_index = 0;
  double mass_ratio = 1.0;  ///< m_p / m_e

  double spacing() const noexcept { return box_length / static_cast<double>(n_sites); }
};

struct LatticeTwoParticleState {
  LatticeParams params;
  /// Grid shift of the electron momentum distribution, (m_e / M) com_index.
  long electron_shift = 0;
  long proton_shift = 0;
  PureBipartiteState state;  ///< u = electron site, v = proton site
};

/// Throws ValidationError for odd or out-of-range N, non-positive L or decay,
/// or a centre-of-mass momentum whose mass-weighted parts are not both
/// lattice momenta (the phase would not be periodic in the box).
LatticeTwoParticleState build_state(const LatticeParams &params);

/// Traces out the proton and reads C(s) off the resulting circulant matrix.
/// Throws NumericalFailure if the reduced density is not translation
/// invariant to 1e-10.
HomogeneousState reduced_electron_correlation(const LatticeTwoParticleState &state);

/// Schmidt spectrum (dense eigensolve) against the plane-wave spectrum.
struct ConsistencyReport {
  std::vector<double> schmidt_lambdas;  ///< descending
  SpectralDistribution spectrum;        ///< on the k grid
  double max_deviation = 0.0;           ///< max |lambda_schmidt - lambda_dft|, sorted
};

ConsistencyReport cross_check(const LatticeTwoParticleState &state, double hbar = 1.0,
                              double rank_tol = kDefaultRankTol);

/// a in [4 dx, L / 8].
bool well_resolved(const LatticeParams &params);

struct ScanRow {
  double decay = 0.0;
  std::size_t rank = 0;
  double purity = 0.0;
  double entropy = 0.0;
  double delta_p = 0.0;
  bool well_resolved = false;
};

/// One row per decay, in input order. Rows are computed on up to `threads`
/// worker threads (0 = hardware concurrency).
std::vector<ScanRow> entanglement_vs_decay_scan(const LatticeParams &base,
                                                const std::vector<double> &decays,
                                                double hbar = 1.0,
                                                double rank_tol = kDefaultRankTol,
                                                unsigned threads = 0);

}  // namespace entangle::lattice

#endif  // ENTANGLE_LATTICE_HPP
