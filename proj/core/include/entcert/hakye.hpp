// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_HAKYE_HPP
#define ENTCERT_HAKYE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "entcert/spa.hpp"

namespace entcert {

/// Probes below this are counted as positivity violations.
inline constexpr double kPositivityProbeTol = 1e-10;
/// Tolerance on the boundary equality b*c = (1-a)^2.
inline constexpr double kOptimalityTol = 1e-12;
/// Slack added to norm comparisons whose exact value sits on the boundary.
inline constexpr double kNormSlack = 1e-12;
/// Bisection stops once the bracket is this narrow.
inline constexpr double kDeltaBisectionWidth = 1e-6;

/// Parameters of the cyclic-weight map family on M_3: diagonal weights
/// a, b, c >= 0 cycled across rows, off-diagonal entries damped by
/// -e^{+-i*theta} with theta in [-pi, pi].
struct HaKyeParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double theta = 0.0;
};

struct SamplingCheck {
  std::size_t violations = 0;
  double worst = 0.0; ///< smallest eigenvalue seen across all probes
};

/// One recorded inequality: holds iff lhs relates to rhs as the name states.
struct ChainEntry {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Full record of the deterministic construction of an optimal positive map
/// whose structural physical approximation is certified entangled.
struct CounterexampleReport {
  double epsilon = 0.0;
  double delta = 0.0;
  HaKyeParams params;
  double p_theta = 0.0;
  /// Value of the alternative printed maximum formula (angles theta,
  /// theta +- pi/3); surfaced for comparison, not used in any decision.
  double p_theta_pi3_variant = 0.0;
  double k = 0.0; ///< 1/(a+b+c), the unitalizing scalar
  double s_psi = 0.0;
  double t_psi = 0.0;
  double neg_norm_phi = 0.0;
  double neg_norm_psi = 0.0;
  double bound = 0.0;
  std::vector<ChainEntry> chain;
  Verdict verdict = Verdict::Failed;
};

/// Entrywise action of phi(a,b,c,theta) on a 3x3 matrix.
ComplexMatrix apply_map(const HaKyeParams& p, const ComplexMatrix& x);

MatrixMap to_matrix_map(const HaKyeParams& p);

/// 9x9 Choi matrix, built directly from the closed form; agrees with
/// choi(to_matrix_map(p)) entry for entry.
ChoiMatrix choi9(const HaKyeParams& p);

/// The circulant 3x3 principal submatrix of choi9 on rows/cols {0, 4, 8}:
/// diagonal a, cyclic -e^{+-i*theta} off-diagonals.
ComplexMatrix p_submatrix(double a, double theta);

/// max_k 2cos(theta + 2*pi*k/3); p_submatrix(a, theta) is PSD iff a >= p_theta.
double p_theta(double theta);

/// max{2cos(theta - pi/3), 2cos(theta), 2cos(theta + pi/3)} — the other
/// printed form of the maximum; can be negative near theta = pi, which is why
/// decisions use p_theta instead.
double p_theta_pi3_variant(double theta);

/// Exact positivity criterion: a+b+c >= p_theta and (a <= 1 implies
/// b*c >= (1-a)^2). Comparisons are exact; inputs are caller-chosen reals.
bool is_positive(const HaKyeParams& p);

/// Necessary-condition probe: smallest eigenvalue of phi(xx*) over seeded
/// random unit vectors x.
SamplingCheck positivity_sampling_check(const HaKyeParams& p, std::size_t trials,
                                        std::uint64_t seed);

/// Sufficient optimality test: positive, 1 < p_theta < 2, 0 <= a < 1, and
/// b*c = (1-a)^2 within tol.
bool is_optimal_sufficient(const HaKyeParams& p, double tol = kOptimalityTol);

/// ||C_phi^-|| = max(0, p_theta - a); the off-submatrix diagonal b, c >= 0
/// never contributes.
double neg_norm_closed_form(const HaKyeParams& p);

/// Deterministic construction, for 0 < epsilon <= 1/4: theta = pi - delta
/// with delta halved from the largest value keeping (p_theta, the phase
/// realness, and the all-ones proximity) within epsilon; a = p_theta -
/// epsilon, b = epsilon, c = (1-a)^2/b. Verifies positivity and optimality,
/// certifies the scaled map's approximation entangled, and records every
/// inequality along the way. Throws EpsilonOutOfRange or DeltaSearchFailed.
CounterexampleReport counterexample(double epsilon);

} // namespace entcert

#endif // ENTCERT_HAKYE_HPP
