// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_SPA_HPP
#define ENTCERT_SPA_HPP

#include "entcert/choi.hpp"

namespace entcert {

/// Unitality tolerance on ||phi(1) - 1||_F.
inline constexpr double kUnitalTol = 1e-9;

/// Structural physical approximation of a unital map phi on M_n: the state
/// on the depolarized path (1-t)/n^2 * 1(x)1 + t*C_phi/n at the largest t
/// that stays positive semidefinite.
struct SpaResult {
  double t_star = 1.0;
  BipartiteOperator spa_state;
  double neg_norm = 0.0; ///< operator norm of the Choi negative part
};

/// Entanglement certificate for the approximation of a unital map: if the
/// approximated state were separable, max(S, T) of the Choi matrix could not
/// exceed n + n(n-1)*neg_norm. Entangled is sound; Inconclusive never claims
/// separability.
struct CertificateReport {
  double s_value = 0.0;
  double t_value = 0.0;
  double neg_norm = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

ComplexMatrix map_on_identity(const MatrixMap& phi);

bool is_unital(const MatrixMap& phi, double tol = kUnitalTol);

/// For phi with phi(1) = lambda*1, lambda > 0, returns phi/lambda.
/// Throws NotUnital if phi(1) is not a positive scalar matrix within tol.
MatrixMap normalize_scalar_unital(const MatrixMap& phi, double tol = kUnitalTol);

/// (1-t)/n^2 * 1(x)1 + t * C_phi/n; trace 1 for every t in [0, 1].
ComplexMatrix w_tilde(const MatrixMap& phi, double t);

/// 1/(1 + n*||C_phi^-||) — the maximal t with w_tilde(phi, t) PSD.
double t_star(const MatrixMap& phi);

/// Closed form (||C^-|| * 1(x)1 + C_phi) / (n + n^2*||C^-||); equals
/// w_tilde(phi, t_star(phi)).
SpaResult spa(const MatrixMap& phi);

CertificateReport spa_entanglement_certificate(const MatrixMap& phi, double tol = kStateTol);

} // namespace entcert

#endif // ENTCERT_SPA_HPP
