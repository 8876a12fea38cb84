// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcert/matrix.hpp"
#include "entcert/rng.hpp"

using namespace entcert;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (const double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

} // namespace

TEST_CASE("kron of identities is the identity") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron of matrix units places a single entry") {
  ComplexMatrix e(2, 2);
  e(0, 0) = 1.0;
  const auto k = kron(e, e);
  CHECK(k.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k(i, j) == (i == 0 && j == 0 ? Complex(1.0) : Complex(0.0)));
}

TEST_CASE("kron of diagonals multiplies entries in row-major block order") {
  const auto k = kron(diag({1.0, 2.0}), diag({3.0, 4.0}));
  CHECK(max_abs_diff(k, diag({3.0, 4.0, 6.0, 8.0})) == 0.0);
}

TEST_CASE("kron index convention matches the coefficient accessor") {
  // (A (x) B)[(i,k),(j,l)] = A[i][j] * B[k][l]
  Rng rng(11);
  const auto a = ginibre_matrix(3, 3, rng);
  const auto b = ginibre_matrix(3, 3, rng);
  const auto k = kron(a, b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q)
          CHECK(k(i * 3 + p, j * 3 + q) == a(i, j) * b(p, q));
}

TEST_CASE("kron is bilinear and multiplicative on traces") {
  Rng rng(5);
  const auto a = ginibre_matrix(2, 2, rng);
  const auto b = ginibre_matrix(2, 2, rng);
  const auto c = ginibre_matrix(3, 3, rng);
  const Complex alpha(0.7, -0.3);
  CHECK(max_abs_diff(kron(alpha * a + b, c), alpha * kron(a, c) + kron(b, c)) < 1e-12);
  CHECK(std::abs(trace(kron(a, c)) - trace(a) * trace(c)) < 1e-12);
}

TEST_CASE("arithmetic and shape checks") {
  const auto a = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const auto b = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(max_abs_diff(a + b, ComplexMatrix::from_rows({{1.0, 3.0}, {4.0, 4.0}})) == 0.0);
  CHECK(max_abs_diff(a - a, ComplexMatrix(2, 2)) == 0.0);
  CHECK((a * b)(0, 0) == Complex(2.0));
  CHECK((Complex(2.0) * a)(1, 1) == Complex(8.0));
  CHECK_THROWS_AS(a + ComplexMatrix(3, 3), DimensionMismatch);
  CHECK_THROWS_AS(a * ComplexMatrix(3, 3), DimensionMismatch);
  CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionMismatch);
}

TEST_CASE("adjoint, transpose, norms") {
  const auto a = ComplexMatrix::from_rows({{Complex(1.0, 2.0), Complex(0.0, -1.0)},
                                           {Complex(3.0, 0.0), Complex(0.0, 4.0)}});
  CHECK(adjoint(a)(0, 1) == Complex(3.0, 0.0));
  CHECK(adjoint(a)(1, 0) == Complex(0.0, 1.0));
  CHECK(transpose(a)(1, 0) == Complex(0.0, -1.0));
  CHECK(trace(a) == Complex(1.0, 6.0));
  CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(1.0 + 4 + 1 + 9 + 16)));
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
}

TEST_CASE("hermitian predicate honors the entrywise tolerance") {
  auto h = ComplexMatrix::from_rows({{1.0, Complex(2.0, 1.0)}, {Complex(2.0, -1.0), 3.0}});
  CHECK(h.is_hermitian());
  h(0, 1) += Complex(0.0, 2e-9);
  CHECK_FALSE(h.is_hermitian());
  CHECK(h.is_hermitian(1e-8));
  CHECK_FALSE(ComplexMatrix(2, 3).is_hermitian());
  // Diagonal imaginary parts break hermiticity too.
  auto d = ComplexMatrix::identity(2);
  d(0, 0) = Complex(1.0, 1e-6);
  CHECK_FALSE(d.is_hermitian());
}
