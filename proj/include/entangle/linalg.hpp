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

#ifndef ENTANGLE_LINALG_HPP
#define ENTANGLE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entangle {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. All entries are finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; throws ValidationError if the
  /// length does not match or any entry is NaN/Inf.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const cplx &operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> entries() const noexcept { return data_; }

  /// Copy of column j.
  std::vector<cplx> column(std::size_t j) const;

  bool operator==(const ComplexMatrix &) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix transpose(const ComplexMatrix &a);
cplx trace(const ComplexMatrix &a);

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, const ComplexMatrix &a);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// u v^T (no conjugation).
ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v);

double frobenius_norm(const ComplexMatrix &a);
/// Largest entry magnitude.
double max_abs(const ComplexMatrix &a);
/// max |a - a^†| entrywise.
double hermiticity_defect(const ComplexMatrix &a);

struct HermitianEigenDecomposition {
  /// Descending. Inside a cluster of near-equal eigenvalues (gap < 1e-10) the
  /// order follows the eigenvectors; only the spanned subspace is meaningful.
  std::vector<double> eigenvalues;
  /// Column j pairs with eigenvalues[j]. Each column's largest-magnitude
  /// component is real and positive.
  ComplexMatrix eigenvectors;
};

inline constexpr double kDefaultHermitianTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeOffNorm = 1e-14;
inline constexpr double kDegeneracyGap = 1e-10;

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Throws ValidationError if `a` is not square or max|a - a^†| > tol, and
/// NumericalFailure if the off-diagonal norm does not fall below
/// 1e-14 ‖a‖_F within 100 sweeps. Output is a deterministic function of the
/// input bits.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix &a,
                                          double tol = kDefaultHermitianTol);

struct GramSvd {
  ComplexMatrix u;            ///< rows × rows, eigenvectors of d d^†
  std::vector<double> sigma;  ///< min(rows, cols) values, descending
  ComplexMatrix v;            ///< cols × cols
  /// Raw eigenvalues of d d^† (length rows), before the square root.
  std::vector<double> gram_eigenvalues;
};

/// Singular value decomposition built from the Gram matrix d d^†.
///
/// sigma_l = sqrt(lambda_l) with lambda from hermitian_eig(d d^†). The paired
/// right vectors are v_l = d^† u_l / sigma_l; for lambda_l <= tol (and for the
/// columns beyond min(rows, cols)) v is completed by Gram-Schmidt against the
/// accepted columns, seeded with standard basis vectors in index order.
/// d = u[:, :p] diag(sigma) v[:, :p]^† with p = min(rows, cols).
GramSvd svd_via_gram(const ComplexMatrix &d, double tol = 1e-12);

}  // namespace entangle

#endif  // ENTANGLE_LINALG_HPP
