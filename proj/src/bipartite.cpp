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

#include "entangle/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "entangle/error.hpp"

namespace entangle {

namespace {

double squared_norm(const ComplexMatrix &m) {
  double s = 0.0;
  for (const auto &z : m.entries()) s += std::norm(z);
  return s;
}

}  // namespace

PureBipartiteState::PureBipartiteState(ComplexMatrix coefficients) : d_(std::move(coefficients)) {
  if (d_.rows() == 0 || d_.cols() == 0) {
    throw ValidationError("PureBipartiteState: dimensions must be at least 1");
  }
  const double n2 = squared_norm(d_);
  if (std::abs(n2 - 1.0) > kNormTol) {
    std::ostringstream os;
    os.precision(17);
    os << "PureBipartiteState: norm invariant violated (sum |d_ij|^2 = " << n2 << ")";
    throw ValidationError(os.str());
  }
}

PureBipartiteState PureBipartiteState::normalized(ComplexMatrix coefficients) {
  const double n = std::sqrt(squared_norm(coefficients));
  if (n == 0.0) throw ValidationError("PureBipartiteState: zero coefficient matrix");
  return PureBipartiteState(cplx{1.0 / n} * coefficients);
}

PureBipartiteState PureBipartiteState::product(std::span<const cplx> u, std::span<const cplx> v) {
  return normalized(outer(u, v));
}

std::vector<cplx> PureBipartiteState::as_vector() const {
  return {d_.entries().begin(), d_.entries().end()};
}

DensityOperator DensityOperator::from_matrix(ComplexMatrix m) {
  if (!m.is_square()) throw ValidationError("DensityOperator: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (defect > 1e-10) {
    throw ValidationError("DensityOperator: Hermiticity invariant violated (defect " +
                          std::to_string(defect) + ")");
  }
  const cplx tr = trace(m);
  if (std::abs(tr - 1.0) > 1e-10) {
    throw ValidationError("DensityOperator: unit-trace invariant violated (trace " +
                          std::to_string(tr.real()) + ")");
  }
  const auto eig = hermitian_eig(m);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -1e-10) {
    throw ValidationError("DensityOperator: non-negativity invariant violated (eigenvalue " +
                          std::to_string(eig.eigenvalues.back()) + ")");
  }
  return DensityOperator(std::move(m));
}

bool DensityOperator::is_idempotent(double tol) const {
  return frobenius_norm(matmul(m_, m_) - m_) <= tol;
}

// Both reductions are Gram matrices, so non-negativity holds by construction;
// only the cheap invariants are rechecked.
DensityOperator reduce_u(const PureBipartiteState &state) {
  const auto &d = state.coefficients();
  const std::size_t nu = d.rows();
  const std::size_t nv = d.cols();
  ComplexMatrix rho(nu, nu);
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t k = i; k < nu; ++k) {
      cplx s{};
      for (std::size_t j = 0; j < nv; ++j) s += d(i, j) * std::conj(d(k, j));
      rho(i, k) = s;
      rho(k, i) = std::conj(s);
    }
    rho(i, i) = rho(i, i).real();
  }
  return DensityOperator(std::move(rho));
}

DensityOperator reduce_v(const PureBipartiteState &state) {
  const auto &d = state.coefficients();
  const std::size_t nu = d.rows();
  const std::size_t nv = d.cols();
  ComplexMatrix rho(nv, nv);
  for (std::size_t l = 0; l < nv; ++l) {
    for (std::size_t j = l; j < nv; ++j) {
      cplx s{};
      for (std::size_t i = 0; i < nu; ++i) s += std::conj(d(i, l)) * d(i, j);
      rho(l, j) = s;
      rho(j, l) = std::conj(s);
    }
    rho(l, l) = rho(l, l).real();
  }
  return DensityOperator(std::move(rho));
}

cplx expectation(const DensityOperator &rho, const ComplexMatrix &a) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw ValidationError("expectation: operator is " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " but density is " +
                          std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
  }
  return trace(matmul(a, rho.matrix()));
}

ComplexMatrix SchmidtDecomposition::reassemble() const {
  ComplexMatrix d(u_basis.rows(), v_basis.rows());
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    if (lambdas[l] <= 0.0) continue;
    const double c = std::sqrt(lambdas[l]);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        d(i, j) += c * u_basis(i, l) * std::conj(v_basis(j, l));
  }
  return d;
}

SchmidtDecomposition schmidt(const PureBipartiteState &state, double tol) {
  if (!(tol >= 0.0)) throw ValidationError("schmidt: tolerance must be non-negative");
  auto svd = svd_via_gram(state.coefficients(), tol);

  for (double &lam : svd.gram_eigenvalues) {
    if (lam < -kLambdaClamp) {
      throw NumericalFailure("schmidt: reduced density eigenvalue " + std::to_string(lam) +
                             " is below -1e-12");
    }
    if (lam < 0.0) lam = 0.0;
  }

  SchmidtDecomposition out;
  const std::size_t p = std::min(state.dim_u(), state.dim_v());
  out.lambdas.assign(svd.gram_eigenvalues.begin(),
                     svd.gram_eigenvalues.begin() + static_cast<std::ptrdiff_t>(p));
  out.u_basis = std::move(svd.u);
  out.v_basis = std::move(svd.v);
  out.rank = static_cast<std::size_t>(
      std::count_if(out.lambdas.begin(), out.lambdas.end(), [tol](double l) { return l > tol; }));
  return out;
}

bool is_product(const PureBipartiteState &state, double tol) {
  return schmidt(state, tol).rank == 1;
}

EntanglementReport entanglement_report(std::span<const double> lambdas, double tol) {
  EntanglementReport r;
  double purity = 0.0;
  double entropy = 0.0;
  std::size_t rank = 0;
  for (double l : lambdas) {
    purity += l * l;
    if (l > 0.0) entropy -= l * std::log(l);
    if (l > tol) ++rank;
  }
  r.schmidt_rank = rank;
  r.purity = purity;
  r.entropy = std::max(entropy, 0.0);
  r.participation_number = 1.0 / purity;
  return r;
}

EntanglementReport entanglement_report(const SchmidtDecomposition &s, double tol) {
  return entanglement_report(s.lambdas, tol);
}

PureBipartiteState random_state(std::size_t dim_u, std::size_t dim_v, std::uint64_t seed) {
  if (dim_u == 0 || dim_v == 0) throw ValidationError("random_state: dimensions must be >= 1");
  std::mt19937_64 gen(seed);
  // Box-Muller on raw 53-bit draws; std::normal_distribution is not
  // reproducible across standard libraries.
  auto uniform = [&gen] { return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<cplx> entries(dim_u * dim_v);
  for (auto &z : entries) {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    z = {r * std::cos(theta), r * std::sin(theta)};
  }
  return PureBipartiteState::normalized(ComplexMatrix(dim_u, dim_v, std::move(entries)));
}

}  // namespace entangle
