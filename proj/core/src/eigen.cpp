// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace entcert {

namespace {

double offdiag_mass(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided rotation A <- U* A U with U supported on rows/cols (p,q),
// U = [[c, -s*w], [s*conj(w), c]], chosen to zero A(p,q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const Complex w = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);

  // Smaller root of t^2 - 2*tau*t - 1 = 0; asymptotic form avoids tau^2 overflow.
  double t;
  if (std::abs(tau) > 1e10) {
    t = -1.0 / (2.0 * tau);
  } else {
    const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
    t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // A <- A * U
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip + s * std::conj(w) * aiq;
    a(i, q) = -s * w * aip + c * aiq;
  }
  // A <- U* * A
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj + s * w * aqj;
    a(q, j) = -s * std::conj(w) * apj + c * aqj;
  }
  // The pivot is zero analytically; pin it and keep the diagonal real.
  a(p, q) = Complex(0.0, 0.0);
  a(q, p) = Complex(0.0, 0.0);
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  // V <- V * U
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + s * std::conj(w) * viq;
    v(i, q) = -s * w * vip + c * viq;
  }
}

} // namespace

HermitianSpectrum hermitian_eigen(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) throw DimensionMismatch("hermitian_eigen: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionMismatch("hermitian_eigen: empty matrix");
  if (n > kMaxEigenDim) {
    throw DimensionMismatch("hermitian_eigen: dimension " + std::to_string(n) +
                            " exceeds supported cap " + std::to_string(kMaxEigenDim));
  }
  if (!a.is_hermitian(tol)) throw NotHermitian("hermitian_eigen: input fails Hermitian predicate");

  // Symmetrize once so roundoff in the input cannot bias the iteration.
  ComplexMatrix work(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      work(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  ComplexMatrix vect = ComplexMatrix::identity(n);
  const double threshold = kJacobiConvergence * frobenius_norm(work);

  bool converged = offdiag_mass(work) <= threshold;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, vect, p, q);
    converged = offdiag_mass(work) <= threshold;
  }
  if (!converged) throw NoConvergence("hermitian_eigen: sweep cap reached");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return work(i, i).real() < work(j, j).real();
  });

  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = work(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vect(i, order[k]);
  }
  return out;
}

double negative_part_norm(const ComplexMatrix& a, double tol) {
  const auto spec = hermitian_eigen(a, tol);
  return std::max(0.0, -spec.eigenvalues.front());
}

std::pair<ComplexMatrix, ComplexMatrix> positive_negative_parts(const ComplexMatrix& a,
                                                                double tol) {
  const auto spec = hermitian_eigen(a, tol);
  const std::size_t n = a.rows();
  ComplexMatrix pos(n, n);
  ComplexMatrix neg(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = spec.eigenvalues[k];
    if (lambda == 0.0) continue;
    ComplexMatrix& dst = lambda > 0.0 ? pos : neg;
    const double weight = std::abs(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = spec.eigenvectors(i, k);
      if (vi == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        dst(i, j) += weight * vi * std::conj(spec.eigenvectors(j, k));
      }
    }
  }
  return {pos, neg};
}

double operator_norm(const ComplexMatrix& a, double tol) {
  const auto spec = hermitian_eigen(a, tol);
  return std::max(std::abs(spec.eigenvalues.front()), std::abs(spec.eigenvalues.back()));
}

bool is_psd(const ComplexMatrix& a, double tol) {
  const auto spec = hermitian_eigen(a);
  return spec.eigenvalues.front() >= -tol;
}

} // namespace entcert
