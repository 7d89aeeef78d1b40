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

#include <doctest.h>

#include <cmath>

#include "entangle/bipartite.hpp"
#include "entangle/error.hpp"
#include "entangle/linalg.hpp"
#include "support/oracles.hpp"
#include "support/random_matrix.hpp"

using namespace entangle;
using testing_support::random_hermitian;
using testing_support::random_matrix;

namespace {

const cplx I{0.0, 1.0};

double max_entry_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return max_abs(a - b); }

double orthonormality_defect(const ComplexMatrix &u) {
  return max_abs(matmul(adjoint(u), u) - ComplexMatrix::identity(u.cols()));
}

ComplexMatrix reconstruct(const HermitianEigenDecomposition &e) {
  return matmul(matmul(e.eigenvectors, ComplexMatrix::diagonal(e.eigenvalues)),
                adjoint(e.eigenvectors));
}

}  // namespace

TEST_CASE("matmul") {
  const auto m = ComplexMatrix::from_rows({{1.0 + 2.0 * I, -3.0}, {0.5, 4.0 * I}});
  CHECK(matmul(ComplexMatrix::identity(2), m) == m);

  const auto swap = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const auto e0 = ComplexMatrix::from_rows({{1.0}, {0.0}});
  CHECK(matmul(swap, e0) == ComplexMatrix::from_rows({{0.0}, {1.0}}));

  const auto a = random_matrix(3, 4, 11);
  const auto b = random_matrix(4, 2, 12);
  const auto c = matmul(a, b);
  CHECK(c.rows() == 3);
  CHECK(c.cols() == 2);
  CHECK(max_entry_diff(c, oracle::naive_matmul(a, b)) <= 1e-14);

  CHECK_THROWS_AS(matmul(a, a), ValidationError);
}

TEST_CASE("adjoint") {
  const auto sym = ComplexMatrix::from_rows({{1.0, 2.0}, {2.0, -5.0}});
  CHECK(adjoint(sym) == sym);
  CHECK(adjoint(ComplexMatrix::from_rows({{I}})) == ComplexMatrix::from_rows({{-I}}));
  const auto r = random_matrix(4, 7, 3);
  CHECK(adjoint(adjoint(r)) == r);
  CHECK(adjoint(r).rows() == 7);
}

TEST_CASE("trace") {
  CHECK(trace(ComplexMatrix::identity(4)) == cplx{4.0});

  const auto rho = reduce_u(random_state(5, 3, 99));
  CHECK(std::abs(trace(rho.matrix()) - 1.0) <= 1e-12);

  const auto r = random_matrix(5, 5, 21);
  cplx s{};
  for (std::size_t i = 0; i < 5; ++i) s += r(i, i);
  CHECK(trace(r) == s);

  CHECK_THROWS_AS(trace(random_matrix(2, 3, 1)), ValidationError);
}

TEST_CASE("ComplexMatrix rejects bad construction") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<cplx>(3)), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, std::vector<cplx>{cplx{NAN, 0.0}}), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, std::vector<cplx>{cplx{0.0, INFINITY}}), ValidationError);
}

TEST_CASE("hermitian_eig on diagonal input") {
  const std::vector<double> diag = {3.0, 1.0, 2.0};
  const auto e = hermitian_eig(ComplexMatrix::diagonal(diag));
  CHECK(e.eigenvalues == std::vector<double>{3.0, 2.0, 1.0});
  // Columns are e_0, e_2, e_1.
  const auto expected = ComplexMatrix::from_rows({{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 1.0, 0.0}});
  CHECK(e.eigenvectors == expected);
}

TEST_CASE("hermitian_eig on Pauli x") {
  const auto e = hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  REQUIRE(e.eigenvalues.size() == 2);
  CHECK(e.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(e.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-15));
  const double h = 1.0 / std::sqrt(2.0);
  const auto expected = ComplexMatrix::from_rows({{h, h}, {h, -h}});
  CHECK(max_entry_diff(e.eigenvectors, expected) <= 1e-15);
}

TEST_CASE("hermitian_eig on random Hermitian 8x8") {
  const auto a = random_hermitian(8, 2024);
  const auto e = hermitian_eig(a);
  double sum = 0.0;
  for (double l : e.eigenvalues) sum += l;
  CHECK(std::abs(sum - trace(a).real()) <= 1e-10 * std::abs(trace(a).real()) + 1e-12);
  CHECK(frobenius_norm(reconstruct(e) - a) <= 1e-10 * frobenius_norm(a));
  CHECK(orthonormality_defect(e.eigenvectors) <= 1e-12);

  const auto ref = oracle::eigenvalues(a);
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(e.eigenvalues[i] - ref[i]) <= 1e-12);
}

TEST_CASE("hermitian_eig properties over random inputs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 20;
    const auto a = random_hermitian(n, 1000 + seed);
    const auto e = hermitian_eig(a);
    double sum = 0.0;
    for (double l : e.eigenvalues) sum += l;
    const double tr = trace(a).real();
    CHECK(std::abs(sum - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));
    CHECK(orthonormality_defect(e.eigenvectors) <= 1e-12);
    CHECK(frobenius_norm(reconstruct(e) - a) <= 1e-10 * frobenius_norm(a));
    for (std::size_t i = 1; i < n; ++i) CHECK(e.eigenvalues[i] <= e.eigenvalues[i - 1] + kDegeneracyGap);
    // Phase convention: the largest-magnitude component is real and positive.
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(e.eigenvectors(i, j)) > std::abs(e.eigenvectors(best, j)) * (1.0 + 1e-9)) best = i;
      CHECK(e.eigenvectors(best, j).real() > 0.0);
      CHECK(e.eigenvectors(best, j).imag() == 0.0);
    }
  }
}

TEST_CASE("hermitian_eig is deterministic") {
  const auto a = random_hermitian(12, 5);
  const auto e1 = hermitian_eig(a);
  const auto e2 = hermitian_eig(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(e1.eigenvectors == e2.eigenvectors);
}

TEST_CASE("hermitian_eig orders a degenerate cluster by eigenvector support") {
  // Eigenvalue 2 is threefold degenerate; after the unitary mixing the solver
  // must return a basis of that subspace, ordered by first significant index.
  const std::vector<double> diag = {2.0, 5.0, 2.0, 2.0};
  const auto a = ComplexMatrix::diagonal(diag);
  const auto e = hermitian_eig(a);
  CHECK(e.eigenvalues == std::vector<double>{5.0, 2.0, 2.0, 2.0});
  CHECK(std::abs(e.eigenvectors(1, 0)) == 1.0);
  CHECK(std::abs(e.eigenvectors(0, 1)) == 1.0);
  CHECK(std::abs(e.eigenvectors(2, 2)) == 1.0);
  CHECK(std::abs(e.eigenvectors(3, 3)) == 1.0);

  // Rotated version: only the spanned subspace is contractual.
  const auto q = hermitian_eig(random_hermitian(4, 8)).eigenvectors;
  const auto rotated = matmul(matmul(q, a), adjoint(q));
  const auto er = hermitian_eig(rotated, 1e-12);
  CHECK(er.eigenvalues[0] == doctest::Approx(5.0).epsilon(1e-13));
  for (std::size_t i = 1; i < 4; ++i) CHECK(er.eigenvalues[i] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(frobenius_norm(reconstruct(er) - rotated) <= 1e-12);
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(random_matrix(3, 3, 4)), ValidationError);
  CHECK_THROWS_AS(hermitian_eig(random_matrix(3, 2, 4)), ValidationError);
  auto almost = random_hermitian(3, 6);
  almost(0, 1) += 1e-6;
  CHECK_THROWS_AS(hermitian_eig(almost, 1e-10), ValidationError);
  CHECK_NOTHROW(hermitian_eig(almost, 1e-5));
}

TEST_CASE("hermitian_eig on the zero matrix") {
  const auto e = hermitian_eig(ComplexMatrix(3, 3));
  CHECK(e.eigenvalues == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(e.eigenvectors == ComplexMatrix::identity(3));
}

TEST_CASE("svd_via_gram on diagonal coefficients") {
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<double> diag = {h, h};
  const auto svd = svd_via_gram(ComplexMatrix::diagonal(diag));
  REQUIRE(svd.sigma.size() == 2);
  CHECK(svd.sigma[0] == doctest::Approx(h).epsilon(1e-15));
  CHECK(svd.sigma[1] == doctest::Approx(h).epsilon(1e-15));
}

TEST_CASE("svd_via_gram on a rank-1 matrix") {
  auto u = testing_support::random_vector(3, 1);
  auto v = testing_support::random_vector(5, 2);
  auto normalize = [](std::vector<cplx> &x) {
    double n = 0.0;
    for (auto &z : x) n += std::norm(z);
    for (auto &z : x) z /= std::sqrt(n);
  };
  normalize(u);
  normalize(v);
  const auto d = outer(u, v);
  const auto svd = svd_via_gram(d);
  REQUIRE(svd.sigma.size() == 3);
  CHECK(svd.sigma[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(svd.sigma[1] <= 1e-7);
  CHECK(svd.sigma[2] <= 1e-7);
  CHECK(orthonormality_defect(svd.v) <= 1e-12);
}

namespace {

ComplexMatrix svd_product(const GramSvd &s, std::size_t rows, std::size_t cols) {
  ComplexMatrix d(rows, cols);
  for (std::size_t l = 0; l < s.sigma.size(); ++l)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d(i, j) += s.sigma[l] * s.u(i, l) * std::conj(s.v(j, l));
  return d;
}

}  // namespace

TEST_CASE("svd_via_gram on a random 4x6 matrix") {
  const auto d = random_matrix(4, 6, 46);
  const auto svd = svd_via_gram(d);
  CHECK(frobenius_norm(d - svd_product(svd, 4, 6)) <= 1e-10 * frobenius_norm(d));
  CHECK(orthonormality_defect(svd.u) <= 1e-12);
  CHECK(orthonormality_defect(svd.v) <= 1e-10);

  // Other Gram matrix d^† d, diagonalized independently.
  const auto right = oracle::eigenvalues(matmul(adjoint(d), d));
  for (std::size_t l = 0; l < svd.sigma.size(); ++l) {
    CHECK(std::abs(svd.sigma[l] * svd.sigma[l] - right[l]) <= 1e-10 * right[0]);
  }
  const auto ref = oracle::singular_values(d);
  for (std::size_t l = 0; l < svd.sigma.size(); ++l) CHECK(std::abs(svd.sigma[l] - ref[l]) <= 1e-10);
}

TEST_CASE("svd_via_gram: transpose has the same singular values") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t r = 1 + seed % 7;
    const std::size_t c = 1 + (seed * 5) % 9;
    const auto d = random_matrix(r, c, 500 + seed);
    const auto a = svd_via_gram(d);
    const auto b = svd_via_gram(transpose(d));
    REQUIRE(a.sigma.size() == b.sigma.size());
    for (std::size_t l = 0; l < a.sigma.size(); ++l) CHECK(std::abs(a.sigma[l] - b.sigma[l]) <= 1e-10);
    CHECK(frobenius_norm(d - svd_product(a, r, c)) <= 1e-10 * frobenius_norm(d));
  }
}

TEST_CASE("svd_via_gram completes the right basis for rank-deficient input") {
  // Two identical rows: rank 1, so v needs completion beyond the first column.
  auto d = random_matrix(1, 4, 77);
  ComplexMatrix twice(2, 4);
  for (std::size_t j = 0; j < 4; ++j) twice(0, j) = twice(1, j) = d(0, j);
  const auto svd = svd_via_gram(twice);
  CHECK(svd.sigma[1] <= 1e-7);
  CHECK(orthonormality_defect(svd.v) <= 1e-12);
  CHECK(frobenius_norm(twice - svd_product(svd, 2, 4)) <= 1e-10 * frobenius_norm(twice));
}
