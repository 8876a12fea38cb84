// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/hakye.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "entcert/eigen.hpp"

namespace entcert {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(const HaKyeParams& p) {
  if (!(p.a >= 0.0 && p.b >= 0.0 && p.c >= 0.0)) {
    throw Error("ha-kye params: a, b, c must be non-negative");
  }
  if (!(p.theta >= -kPi && p.theta <= kPi)) {
    throw Error("ha-kye params: theta must lie in [-pi, pi]");
  }
}

// Weight of x_{jj} in row k of the diagonal action: (a,b,c) cycled right
// once per row.
double diag_weight(const HaKyeParams& p, std::size_t k, std::size_t j) {
  const double params[3] = {p.a, p.b, p.c};
  return params[(j + 3 - k) % 3];
}

// -e^{i*theta} one step forward around the 3-cycle, -e^{-i*theta} backward.
Complex offdiag_phase(double theta, std::size_t k, std::size_t l) {
  const double sign = (l == (k + 1) % 3) ? 1.0 : -1.0;
  return -Complex(std::cos(theta), sign * std::sin(theta));
}

ComplexMatrix ones3() {
  ComplexMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = 1.0;
  return m;
}

} // namespace

ComplexMatrix apply_map(const HaKyeParams& p, const ComplexMatrix& x) {
  require_valid(p);
  if (x.rows() != 3 || x.cols() != 3) {
    throw DimensionMismatch("apply_map: argument must be 3x3");
  }
  ComplexMatrix out(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t j = 0; j < 3; ++j) out(k, k) += diag_weight(p, k, j) * x(j, j);
    for (std::size_t l = 0; l < 3; ++l) {
      if (l == k) continue;
      out(k, l) = offdiag_phase(p.theta, k, l) * x(k, l);
    }
  }
  return out;
}

MatrixMap to_matrix_map(const HaKyeParams& p) {
  require_valid(p);
  std::vector<ComplexMatrix> images(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ComplexMatrix unit(3, 3);
      unit(i, j) = 1.0;
      images[i * 3 + j] = apply_map(p, unit);
    }
  return MatrixMap(3, 3, std::move(images));
}

ChoiMatrix choi9(const HaKyeParams& p) {
  require_valid(p);
  ChoiMatrix c;
  c.input_dim = 3;
  c.output_dim = 3;
  c.mat = ComplexMatrix(9, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) c.mat(i * 3 + k, i * 3 + k) = diag_weight(p, k, i);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i) continue;
      c.mat(i * 3 + i, j * 3 + j) = offdiag_phase(p.theta, i, j);
    }
  }
  return c;
}

ComplexMatrix p_submatrix(double a, double theta) {
  ComplexMatrix m(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    m(k, k) = a;
    for (std::size_t l = 0; l < 3; ++l) {
      if (l == k) continue;
      m(k, l) = offdiag_phase(theta, k, l);
    }
  }
  return m;
}

double p_theta(double theta) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    best = std::max(best, 2.0 * std::cos(theta + 2.0 * kPi * k / 3.0));
  }
  return best;
}

double p_theta_pi3_variant(double theta) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = -1; k <= 1; ++k) {
    best = std::max(best, 2.0 * std::cos(theta + kPi * k / 3.0));
  }
  return best;
}

bool is_positive(const HaKyeParams& p) {
  require_valid(p);
  if (p.a + p.b + p.c < p_theta(p.theta)) return false;
  if (p.a <= 1.0 && p.b * p.c < (1.0 - p.a) * (1.0 - p.a)) return false;
  return true;
}

SamplingCheck positivity_sampling_check(const HaKyeParams& p, std::size_t trials,
                                        std::uint64_t seed) {
  require_valid(p);
  Rng rng(seed);
  SamplingCheck check;
  check.worst = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    Complex x[3];
    double norm = 0.0;
    for (auto& entry : x) {
      entry = rng.complex_gaussian();
      norm += std::norm(entry);
    }
    norm = std::sqrt(norm);
    ComplexMatrix proj(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) proj(i, j) = x[i] * std::conj(x[j]) / (norm * norm);
    const double lambda_min = hermitian_eigen(apply_map(p, proj)).eigenvalues.front();
    if (lambda_min < -kPositivityProbeTol) ++check.violations;
    check.worst = std::min(check.worst, lambda_min);
  }
  return check;
}

bool is_optimal_sufficient(const HaKyeParams& p, double tol) {
  if (!is_positive(p)) return false;
  const double pt = p_theta(p.theta);
  if (!(pt > 1.0 && pt < 2.0)) return false;
  if (!(p.a >= 0.0 && p.a < 1.0)) return false;
  return std::abs(p.b * p.c - (1.0 - p.a) * (1.0 - p.a)) <= tol;
}

double neg_norm_closed_form(const HaKyeParams& p) {
  require_valid(p);
  return std::max(0.0, p_theta(p.theta) - p.a);
}

CounterexampleReport counterexample(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 0.25)) {
    throw EpsilonOutOfRange("counterexample: epsilon must lie in (0, 1/4]");
  }

  const ComplexMatrix target = ones3();
  const auto admissible = [&](double delta) {
    const double theta = kPi - delta;
    const double pt = p_theta(theta);
    if (!(pt > 1.0 && pt < 1.0 + epsilon)) return false;
    if (!(std::cos(delta) > 1.0 - epsilon)) return false;
    // The proximity norm equals epsilon exactly at one eigenvalue for every
    // admissible delta, so the comparison carries a rounding slack.
    const double distance = operator_norm(p_submatrix(pt - epsilon, theta) - target);
    return distance <= epsilon + kNormSlack;
  };

  double lo = 1e-9;
  double hi = kPi / 3.0;
  if (!admissible(lo)) throw DeltaSearchFailed("counterexample: no admissible delta found");
  while (hi - lo > kDeltaBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) ? lo : hi) = mid;
  }
  const double delta = 0.5 * lo; // halve the largest admissible value for margin

  const double theta = kPi - delta;
  const double pt = p_theta(theta);
  const double a = pt - epsilon;
  const double b = epsilon;
  const double boundary = (1.0 - a) * (1.0 - a);
  double c = boundary / b;
  // Nudge c upward until the exact positivity comparison b*c >= (1-a)^2
  // holds despite division rounding.
  while (b * c < boundary) c = std::nextafter(c, std::numeric_limits<double>::infinity());

  const HaKyeParams p{a, b, c, theta};
  const double sum = a + b + c;
  const double k = 1.0 / sum;

  const double neg_phi = negative_part_norm(choi9(p).mat);
  const CertificateReport cert =
      spa_entanglement_certificate(scale(to_matrix_map(p), Complex(k, 0.0)));

  CounterexampleReport report;
  report.epsilon = epsilon;
  report.delta = delta;
  report.params = p;
  report.p_theta = pt;
  report.p_theta_pi3_variant = p_theta_pi3_variant(theta);
  report.k = k;
  report.s_psi = cert.s_value;
  report.t_psi = cert.t_value;
  report.neg_norm_phi = neg_phi;
  report.neg_norm_psi = cert.neg_norm;
  report.bound = cert.bound;

  const double proximity = operator_norm(p_submatrix(a, theta) - target);
  report.chain = {
      {"p_theta_above_one", pt, 1.0, pt > 1.0},
      {"p_theta_below_one_plus_eps", pt, 1.0 + epsilon, pt < 1.0 + epsilon},
      {"off_diagonal_phase_real", -std::cos(theta), 1.0 - epsilon,
       -std::cos(theta) > 1.0 - epsilon},
      {"p_submatrix_near_ones", proximity, epsilon, proximity <= epsilon + kNormSlack},
      {"positivity_diagonal_sum", sum, pt, sum > pt},
      {"positivity_offdiag_product", b * c, boundary, b * c >= boundary},
      {"optimality_conditions", std::abs(b * c - boundary), kOptimalityTol,
       is_optimal_sufficient(p)},
      {"trace_scalar_above_one", sum, 1.0, sum > 1.0},
      {"trace_scalar_below_bound", sum, 1.0 + 2.0 * epsilon, sum < 1.0 + 2.0 * epsilon},
      {"choi_negative_norm", neg_phi, epsilon, neg_phi <= epsilon + kNormSlack},
      {"spa_bound_exceeded", cert.s_value, cert.bound, cert.verdict == Verdict::Entangled},
  };

  bool all_hold = true;
  for (const auto& entry : report.chain) all_hold = all_hold && entry.holds;
  report.verdict = all_hold ? Verdict::Entangled : Verdict::Failed;
  return report;
}

} // namespace entcert
