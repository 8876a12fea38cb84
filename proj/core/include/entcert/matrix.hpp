// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_MATRIX_HPP
#define ENTCERT_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "entcert/errors.hpp"

namespace entcert {

using Complex = std::complex<double>;

/// Entrywise tolerance for the Hermitian predicate. Inputs in this library
/// are constructed analytically, so the default is tight.
inline constexpr double kHermitianTol = 1e-9;

/// Default tolerance for state predicates (trace one, positive semidefinite).
inline constexpr double kStateTol = 1e-9;

/// Dense complex matrix, row-major storage. Values are immutable in spirit:
/// every library operation returns a fresh matrix and never mutates its
/// arguments, so instances can be shared across threads freely.
class ComplexMatrix {
public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Convenience builder for literal test matrices.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return data_; }

  /// max_{ij} |A[i][j] - conj(A[j][i])| <= tol
  bool is_hermitian(double tol = kHermitianTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product with row index i*rows(B)+k, so that
/// (A (x) B)[(i,k),(j,l)] = A[i][j] * B[k][l]. The bipartite coefficient
/// accessor relies on exactly this convention.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace entcert

#endif // ENTCERT_MATRIX_HPP
