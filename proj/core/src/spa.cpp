// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/spa.hpp"

#include <algorithm>
#include <cmath>

#include "entcert/eigen.hpp"

namespace entcert {

namespace {

void require_square_unital(const MatrixMap& phi, const char* op) {
  if (phi.n != phi.m) {
    throw DimensionMismatch(std::string(op) + ": map must act on a single M_n");
  }
  if (!is_unital(phi)) throw NotUnital(std::string(op) + ": map is not unital");
}

} // namespace

ComplexMatrix map_on_identity(const MatrixMap& phi) {
  return apply(phi, ComplexMatrix::identity(phi.n));
}

bool is_unital(const MatrixMap& phi, double tol) {
  if (phi.n != phi.m) return false;
  return frobenius_norm(map_on_identity(phi) - ComplexMatrix::identity(phi.m)) <= tol;
}

MatrixMap normalize_scalar_unital(const MatrixMap& phi, double tol) {
  if (phi.n != phi.m) {
    throw NotUnital("normalize_scalar_unital: map must act on a single M_n");
  }
  const ComplexMatrix one = map_on_identity(phi);
  const Complex lambda = trace(one) / Complex(static_cast<double>(phi.m), 0.0);
  if (std::abs(lambda.imag()) > tol || lambda.real() <= tol) {
    throw NotUnital("normalize_scalar_unital: phi(1) scalar is not a positive real");
  }
  const double scale_tol = tol * std::max(1.0, std::abs(lambda));
  if (frobenius_norm(one - lambda * ComplexMatrix::identity(phi.m)) > scale_tol) {
    throw NotUnital("normalize_scalar_unital: phi(1) is not a scalar matrix");
  }
  return scale(phi, Complex(1.0, 0.0) / lambda);
}

ComplexMatrix w_tilde(const MatrixMap& phi, double t) {
  require_square_unital(phi, "w_tilde");
  if (!(t >= 0.0 && t <= 1.0)) throw TOutOfRange("w_tilde: t must lie in [0, 1]");
  const double n = static_cast<double>(phi.n);
  ComplexMatrix out = choi(phi).mat;
  out *= Complex(t / n, 0.0);
  const Complex uniform((1.0 - t) / (n * n), 0.0);
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += uniform;
  return out;
}

double t_star(const MatrixMap& phi) {
  require_square_unital(phi, "t_star");
  const double neg = negative_part_norm(choi(phi).mat);
  return 1.0 / (1.0 + static_cast<double>(phi.n) * neg);
}

SpaResult spa(const MatrixMap& phi) {
  require_square_unital(phi, "spa");
  const double n = static_cast<double>(phi.n);
  ComplexMatrix c = choi(phi).mat;
  const double neg = negative_part_norm(c);
  const Complex shift(neg, 0.0);
  for (std::size_t i = 0; i < c.rows(); ++i) c(i, i) += shift;
  c *= Complex(1.0 / (n + n * n * neg), 0.0);
  SpaResult result;
  result.t_star = 1.0 / (1.0 + n * neg);
  result.spa_state = BipartiteOperator(phi.n, std::move(c));
  result.neg_norm = neg;
  return result;
}

CertificateReport spa_entanglement_certificate(const MatrixMap& phi, double tol) {
  require_square_unital(phi, "spa_entanglement_certificate");
  const double n = static_cast<double>(phi.n);
  const BipartiteOperator c = choi(phi).as_bipartite();
  CertificateReport report;
  report.s_value = s_functional(c).real();
  report.t_value = t_functional(c).real();
  report.neg_norm = negative_part_norm(c.mat);
  report.bound = n + n * (n - 1.0) * report.neg_norm;
  report.margin = std::max(report.s_value, report.t_value) - report.bound;
  report.verdict = report.margin > tol ? Verdict::Entangled : Verdict::Inconclusive;
  return report;
}

} // namespace entcert
