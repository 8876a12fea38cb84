// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_EIGEN_HPP
#define ENTCERT_EIGEN_HPP

#include <utility>
#include <vector>

#include "entcert/matrix.hpp"

namespace entcert {

/// Convergence: off-diagonal Frobenius mass <= kJacobiConvergence * ||A||_F.
inline constexpr double kJacobiConvergence = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr std::size_t kMaxEigenDim = 64;

/// Spectral decomposition of a Hermitian matrix: A = U diag(lambda) U*.
/// eigenvalues ascending; column k of eigenvectors pairs with eigenvalues[k].
struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization for complex Hermitian A, n <= 64.
/// Throws NotHermitian if A fails the Hermitian predicate at `tol`,
/// NoConvergence if the sweep cap is hit, DimensionMismatch for shape errors.
HermitianSpectrum hermitian_eigen(const ComplexMatrix& a, double tol = kHermitianTol);

/// max(0, -lambda_min(A)); zero exactly when A is positive semidefinite.
double negative_part_norm(const ComplexMatrix& a, double tol = kHermitianTol);

/// A = first - second with both summands PSD and first*second = 0.
std::pair<ComplexMatrix, ComplexMatrix> positive_negative_parts(const ComplexMatrix& a,
                                                                double tol = kHermitianTol);

/// max |lambda| for Hermitian input.
double operator_norm(const ComplexMatrix& a, double tol = kHermitianTol);

/// lambda_min(A) >= -tol.
bool is_psd(const ComplexMatrix& a, double tol = kStateTol);

} // namespace entcert

#endif // ENTCERT_EIGEN_HPP
