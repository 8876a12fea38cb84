// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "entcert/eigen.hpp"
#include "entcert/spa.hpp"

using namespace entcert;

namespace {

// Random Hermiticity-preserving map made unital by absorbing the defect of
// phi(1) into the diagonal images.
MatrixMap random_unital_map(std::size_t n, Rng& rng) {
  std::vector<ComplexMatrix> images(n * n, ComplexMatrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    images[i * n + i] = random_hermitian(n, rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      images[i * n + j] = ginibre_matrix(n, n, rng);
      images[j * n + i] = adjoint(images[i * n + j]);
    }
  }
  ComplexMatrix defect(n, n);
  for (std::size_t i = 0; i < n; ++i) defect += images[i * n + i];
  defect -= ComplexMatrix::identity(n);
  defect *= Complex(1.0 / static_cast<double>(n), 0.0);
  for (std::size_t i = 0; i < n; ++i) images[i * n + i] -= defect;
  return MatrixMap(n, n, std::move(images));
}

double min_eigenvalue(const ComplexMatrix& a) { return hermitian_eigen(a).eigenvalues.front(); }

} // namespace

TEST_CASE("unitality predicate") {
  CHECK(is_unital(identity_map(3)));
  CHECK(is_unital(transpose_map(3)));
  CHECK(is_unital(ad(haar_random_unitary(3, 1))));
  CHECK_FALSE(is_unital(trace_map(3)));

  Rng rng(3);
  const auto stretched = ad(ginibre_matrix(3, 2, rng));
  CHECK_FALSE(is_unital(stretched));
  CHECK(max_abs_diff(map_on_identity(trace_map(3)),
                     Complex(3.0) * ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("scalar-unital normalization divides out phi(1)") {
  const auto normalized = normalize_scalar_unital(trace_map(3));
  CHECK(is_unital(normalized));
  Rng rng(5);
  const auto x = random_hermitian(3, rng);
  CHECK(max_abs_diff(apply(normalized, x), (trace(x) / Complex(3.0)) * ComplexMatrix::identity(3)) <
        1e-14);

  // ad(2U) is ad(U) scaled by an exact power of two.
  const auto u = haar_random_unitary(3, 7);
  const auto rescaled = normalize_scalar_unital(ad(Complex(2.0) * u));
  const auto reference = ad(u);
  for (std::size_t i = 0; i < rescaled.images.size(); ++i) {
    CHECK(max_abs_diff(rescaled.images[i], reference.images[i]) == 0.0);
  }
}

TEST_CASE("scalar-unital normalization rejects non-scalar images of 1") {
  ComplexMatrix stretch(3, 3);
  stretch(0, 0) = 1.0;
  stretch(1, 1) = std::sqrt(2.0);
  stretch(2, 2) = std::sqrt(3.0);
  CHECK_THROWS_AS(normalize_scalar_unital(ad(stretch)), NotUnital);
  CHECK_THROWS_AS(normalize_scalar_unital(scale(identity_map(3), Complex(-1.0))), NotUnital);
  Rng rng(11);
  CHECK_THROWS_AS(normalize_scalar_unital(ad(ginibre_matrix(3, 2, rng))), NotUnital);
}

TEST_CASE("depolarized path at reference points") {
  const auto at_half = w_tilde(transpose_map(3), 0.5);
  const auto expected = Complex(1.0 / 18) * ComplexMatrix::identity(9) +
                        Complex(1.0 / 6) * flip(3).mat;
  CHECK(max_abs_diff(at_half, expected) < 1e-15);

  CHECK(max_abs_diff(w_tilde(transpose_map(3), 0.0),
                     Complex(1.0 / 9) * ComplexMatrix::identity(9)) < 1e-15);
  CHECK(max_abs_diff(w_tilde(identity_map(3), 1.0), max_entangled(3).mat) < 1e-15);

  for (const double t : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(std::abs(trace(w_tilde(transpose_map(3), t)) - Complex(1.0)) <= 1e-14);
  }
}

TEST_CASE("depolarized path rejects bad inputs") {
  CHECK_THROWS_AS(w_tilde(transpose_map(3), -0.1), TOutOfRange);
  CHECK_THROWS_AS(w_tilde(transpose_map(3), 1.0000001), TOutOfRange);
  CHECK_THROWS_AS(w_tilde(transpose_map(3), std::nan("")), TOutOfRange);
  CHECK_THROWS_AS(w_tilde(trace_map(3), 0.5), NotUnital);
  Rng rng(13);
  CHECK_THROWS_AS(w_tilde(ad(ginibre_matrix(3, 2, rng)), 0.5), DimensionMismatch);
}

TEST_CASE("minimal eigenvalue along the path is affine in t") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto phi = random_unital_map(3, rng);
    const double lo = min_eigenvalue(w_tilde(phi, 0.0));
    const double mid = min_eigenvalue(w_tilde(phi, 0.5));
    const double hi = min_eigenvalue(w_tilde(phi, 1.0));
    CHECK(std::abs(mid - 0.5 * (lo + hi)) <= 1e-10);
  }
}

TEST_CASE("threshold parameter for reference maps") {
  CHECK(t_star(identity_map(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t_star(transpose_map(3)) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(t_star(transpose_map(2)) == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("threshold parameter is the PSD boundary of the path") {
  Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    const auto phi = random_unital_map(3, rng);
    const double ts = t_star(phi);
    REQUIRE(ts > 0.0);
    REQUIRE(ts <= 1.0);
    CHECK(min_eigenvalue(w_tilde(phi, ts)) >= -1e-11);
    if (ts < 1.0) {
      const double beyond = std::min(1.0, ts + 1e-3);
      CHECK(min_eigenvalue(w_tilde(phi, beyond)) < 0.0);
    }
  }
}

TEST_CASE("closed-form approximation equals the path at the threshold") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_unital_map(3, rng);
    const auto result = spa(phi);
    CHECK(max_abs_diff(result.spa_state.mat, w_tilde(phi, result.t_star)) <= 1e-12);
    CHECK(std::abs(trace(result.spa_state.mat) - Complex(1.0)) <= 1e-12);
    CHECK(result.t_star == doctest::Approx(t_star(phi)).epsilon(1e-14));
    CHECK(is_psd(result.spa_state.mat, 1e-10));
  }
}

TEST_CASE("approximation of a completely positive map is its normalized choi state") {
  const auto u = haar_random_unitary(3, 29);
  const auto result = spa(ad(u));
  CHECK(result.neg_norm <= 1e-12);
  CHECK(result.t_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(result.spa_state.mat, Complex(1.0 / 3) * choi(ad(u)).mat) <= 1e-12);
}

TEST_CASE("approximation of the transpose is the symmetric unit") {
  const auto result = spa(transpose_map(3));
  CHECK(result.neg_norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.t_star == doctest::Approx(0.25).epsilon(1e-12));
  const auto expected =
      Complex(1.0 / 12) * (ComplexMatrix::identity(9) + flip(3).mat);
  CHECK(max_abs_diff(result.spa_state.mat, expected) <= 1e-12);
  CHECK(ppt_check(result.spa_state));
}

TEST_CASE("certificate for the identity map flags its entangled choi state") {
  const auto report = spa_entanglement_certificate(identity_map(3));
  CHECK(report.s_value == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(report.t_value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(report.neg_norm <= 1e-12);
  CHECK(report.bound == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(report.margin == doctest::Approx(6.0).epsilon(1e-11));
  CHECK(report.verdict == Verdict::Entangled);
  // Soundness: here the approximated state is the maximally entangled one.
  CHECK_FALSE(ppt_check(spa(identity_map(3)).spa_state));
}

TEST_CASE("certificate for the transpose map is inconclusive") {
  const auto report = spa_entanglement_certificate(transpose_map(3));
  CHECK(report.s_value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(report.t_value == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(report.neg_norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.bound == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(std::abs(report.margin) <= 1e-12);
  CHECK(report.verdict == Verdict::Inconclusive);
}

TEST_CASE("certificate requires a unital square map") {
  CHECK_THROWS_AS(spa_entanglement_certificate(trace_map(3)), NotUnital);
  CHECK_THROWS_AS(spa(trace_map(3)), NotUnital);
  CHECK_THROWS_AS(t_star(trace_map(3)), NotUnital);
  Rng rng(31);
  CHECK_THROWS_AS(spa(ad(ginibre_matrix(3, 2, rng))), DimensionMismatch);
}
