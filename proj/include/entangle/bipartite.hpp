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

#ifndef ENTANGLE_BIPARTITE_HPP
#define ENTANGLE_BIPARTITE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "entangle/linalg.hpp"

namespace entangle {

inline constexpr double kNormTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-12;
/// Schmidt weights in [-kLambdaClamp, 0) are rounding noise and become 0.
inline constexpr double kLambdaClamp = 1e-12;

/// |Ψ> = Σ_ij d_ij |u_i>|v_j>, stored as the dim_u × dim_v coefficient matrix.
class PureBipartiteState {
 public:
  /// Throws ValidationError unless Σ|d_ij|² = 1 within 1e-10.
  explicit PureBipartiteState(ComplexMatrix coefficients);

  /// Scales `coefficients` to unit norm. Throws ValidationError on a zero matrix.
  static PureBipartiteState normalized(ComplexMatrix coefficients);

  /// |u>|v> for arbitrary nonzero u, v (normalized internally).
  static PureBipartiteState product(std::span<const cplx> u, std::span<const cplx> v);

  std::size_t dim_u() const noexcept { return d_.rows(); }
  std::size_t dim_v() const noexcept { return d_.cols(); }
  const ComplexMatrix &coefficients() const noexcept { return d_; }

  /// Flattened state vector with index i * dim_v + j.
  std::vector<cplx> as_vector() const;

 private:
  ComplexMatrix d_;
};

/// Hermitian, non-negative, unit-trace matrix.
class DensityOperator {
 public:
  /// Checks every invariant (this runs an eigensolve). Throws ValidationError
  /// naming the first violated one.
  static DensityOperator from_matrix(ComplexMatrix m);

  const ComplexMatrix &matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }

  bool is_idempotent(double tol) const;

 private:
  explicit DensityOperator(ComplexMatrix m) : m_(std::move(m)) {}
  friend DensityOperator reduce_u(const PureBipartiteState &);
  friend DensityOperator reduce_v(const PureBipartiteState &);

  ComplexMatrix m_;
};

struct SchmidtDecomposition {
  /// Occupation probabilities |c_λ|², descending, length min(dim_u, dim_v).
  std::vector<double> lambdas;
  /// dim_u × dim_u; column l is |u_λ>, eigenvector of ρᵘ.
  ComplexMatrix u_basis;
  /// dim_v × dim_v; column l is |v_λ> = d^† u_λ / sqrt(λ), eigenvector of ρᵛ.
  ComplexMatrix v_basis;
  /// Number of lambdas above the rank tolerance.
  std::size_t rank = 0;

  /// Σ_λ sqrt(λ) u_λ v_λ^* as a dim_u × dim_v coefficient matrix.
  ComplexMatrix reassemble() const;
};

struct EntanglementReport {
  std::size_t schmidt_rank = 0;
  double purity = 1.0;                ///< Σ λ²
  double entropy = 0.0;               ///< -Σ λ ln λ
  double participation_number = 1.0;  ///< 1 / Σ λ²
};

/// ρᵘ_ik = Σ_j d_ij d*_kj (trace over the v factor).
DensityOperator reduce_u(const PureBipartiteState &state);

/// ρᵛ_lj = Σ_i d*_il d_ij, i.e. d^† d. Note that this is the complex
/// conjugate of the usual Tr_u |Ψ><Ψ| in the {|v_j>} basis; the spectra agree.
DensityOperator reduce_v(const PureBipartiteState &state);

/// Tr(a ρ). Throws ValidationError on a shape mismatch.
cplx expectation(const DensityOperator &rho, const ComplexMatrix &a);

/// Schmidt decomposition from the eigenvectors of ρᵘ. Throws NumericalFailure
/// when an eigenvalue of ρᵘ falls below -1e-12.
SchmidtDecomposition schmidt(const PureBipartiteState &state, double tol = kDefaultRankTol);

bool is_product(const PureBipartiteState &state, double tol = kDefaultRankTol);

/// Purity, entropy and participation number from a list of Schmidt weights.
EntanglementReport entanglement_report(const SchmidtDecomposition &s,
                                       double tol = kDefaultRankTol);
EntanglementReport entanglement_report(std::span<const double> lambdas,
                                       double tol = kDefaultRankTol);

/// Complex Gaussian coefficients from a seeded mt19937_64, normalized. The
/// same (dims, seed) always gives the same bits.
PureBipartiteState random_state(std::size_t dim_u, std::size_t dim_v, std::uint64_t seed);

}  // namespace entangle

#endif  // ENTANGLE_BIPARTITE_HPP
