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

#include "entangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "entangle/error.hpp"

namespace entangle {

namespace {

std::string shape_str(const ComplexMatrix &a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " +
                          shape_str(b));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ValidationError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(data_.size()));
  }
  for (const auto &z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cplx> data;
  data.reserve(r * c);
  for (const auto &row : rows) {
    if (row.size() != c) throw ValidationError("from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(data));
}

std::vector<cplx> ComplexMatrix::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.cols() != b.rows()) {
    throw ValidationError("matmul: inner dimensions differ (" + shape_str(a) + " times " +
                          shape_str(b) + ")");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

ComplexMatrix transpose(const ComplexMatrix &a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

cplx trace(const ComplexMatrix &a) {
  if (!a.is_square()) throw ValidationError("trace: matrix is " + shape_str(a) + ", not square");
  cplx s{};
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "operator+");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_shape(a, b, "operator-");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix &a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v) {
  ComplexMatrix c(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) c(i, j) = u[i] * v[j];
  return c;
}

double frobenius_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (const auto &z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix &a) {
  double m = 0.0;
  for (const auto &z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double hermiticity_defect(const ComplexMatrix &a) {
  if (!a.is_square()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A <- J^† A J and V <- V J for the unitary that annihilates A(p, q):
// J_pp = c, J_pq = s e^{iφ}, J_qp = -s e^{-iφ}, J_qq = c with φ = arg A(p, q).
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  const cplx phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double zeta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  if (zeta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const cplx jpq = s * phase;
  const cplx jqp = -s * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * c + akq * jqp;
    a(k, q) = akp * jpq + akq * c;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + c * aqk;
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * c + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * c;
  }
}

// Rotates each column so that its largest-magnitude component (first index on
// ties) is real and positive.
void fix_phases(ComplexMatrix &v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) best = std::max(best, std::abs(v(i, j)));
    if (best == 0.0) continue;
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, j)) >= best * (1.0 - 1e-10)) {
        pivot = i;
        break;
      }
    }
    const cplx rot = std::conj(v(pivot, j)) / std::abs(v(pivot, j));
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= rot;
    v(pivot, j) = std::abs(v(pivot, j));
  }
}

std::size_t first_significant(const ComplexMatrix &v, std::size_t j) {
  for (std::size_t i = 0; i < v.rows(); ++i)
    if (std::abs(v(i, j)) > 1e-8) return i;
  return v.rows();
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix &a, double tol) {
  if (!a.is_square()) {
    throw ValidationError("hermitian_eig: matrix is " + shape_str(a) + ", not square");
  }
  const double defect = hermiticity_defect(a);
  if (defect > tol) {
    std::ostringstream os;
    os << "hermitian_eig: matrix is not Hermitian (max |a - a^dagger| = " << defect
       << " > tol " << tol << ")";
    throw ValidationError(os.str());
  }

  const std::size_t n = a.rows();
  ComplexMatrix work(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    work(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      work(i, j) = avg;
      work(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix vecs = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(work);
  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(work) <= kJacobiRelativeOffNorm * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(work(p, q));
        if (mag == 0.0) continue;
        // Entries that no longer register against both diagonal entries are
        // dropped; the rotation they would produce is below rounding.
        const double dp = std::abs(work(p, p).real());
        const double dq = std::abs(work(q, q).real());
        if (sweep > 3 && dp + 100.0 * mag == dp && dq + 100.0 * mag == dq) {
          work(p, q) = 0.0;
          work(q, p) = 0.0;
          continue;
        }
        jacobi_rotate(work, vecs, p, q);
      }
    }
  }
  if (!converged && off_diagonal_norm(work) > kJacobiRelativeOffNorm * scale) {
    throw NumericalFailure("hermitian_eig: Jacobi iteration did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  fix_phases(vecs);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return work(x, x).real() > work(y, y).real();
  });
  // Reorder each near-degenerate cluster by eigenvector support.
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n &&
           work(order[end - 1], order[end - 1]).real() - work(order[end], order[end]).real() <
               kDegeneracyGap)
      ++end;
    if (end - start > 1) {
      std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                       order.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](std::size_t x, std::size_t y) {
                         return first_significant(vecs, x) < first_significant(vecs, y);
                       });
    }
    start = end;
  }

  HermitianEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = work(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = vecs(i, order[j]);
  }
  return out;
}

GramSvd svd_via_gram(const ComplexMatrix &d, double tol) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  const std::size_t p = std::min(m, n);

  const ComplexMatrix gram = matmul(d, adjoint(d));
  auto eig = hermitian_eig(gram, std::max(kDefaultHermitianTol, 1e-12 * max_abs(gram)));

  GramSvd out;
  out.u = std::move(eig.eigenvectors);
  out.sigma.resize(p);
  out.v = ComplexMatrix(n, n);

  std::vector<std::vector<cplx>> accepted;
  accepted.reserve(n);
  std::size_t col = 0;
  for (; col < p; ++col) {
    const double lambda = eig.eigenvalues[col];
    out.sigma[col] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    if (lambda <= tol) break;
    // v_l = d^† u_l, then normalized.
    std::vector<cplx> vcol(n);
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t k = 0; k < m; ++k) s += std::conj(d(k, j)) * out.u(k, col);
      vcol[j] = s;
    }
    double norm = 0.0;
    for (const auto &z : vcol) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto &z : vcol) z /= norm;
    accepted.push_back(std::move(vcol));
  }
  for (std::size_t rest = col; rest < p; ++rest) {
    const double lambda = eig.eigenvalues[rest];
    out.sigma[rest] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }

  for (std::size_t seed = 0; accepted.size() < n && seed < n; ++seed) {
    std::vector<cplx> cand(n);
    cand[seed] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto &q : accepted) {
        cplx overlap{};
        for (std::size_t j = 0; j < n; ++j) overlap += std::conj(q[j]) * cand[j];
        for (std::size_t j = 0; j < n; ++j) cand[j] -= overlap * q[j];
      }
    }
    double norm = 0.0;
    for (const auto &z : cand) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (auto &z : cand) z /= norm;
    accepted.push_back(std::move(cand));
  }
  out.gram_eigenvalues = std::move(eig.eigenvalues);
  if (accepted.size() != n) {
    throw NumericalFailure("svd_via_gram: could not complete the right basis");
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out.v(i, j) = accepted[j][i];
  return out;
}

}  // namespace entangle
