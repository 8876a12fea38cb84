// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_BIPARTITE_HPP
#define ENTCERT_BIPARTITE_HPP

#include <cstdint>

#include "entcert/eigen.hpp"
#include "entcert/matrix.hpp"
#include "entcert/rng.hpp"

namespace entcert {

enum class Verdict { Separable, Entangled, Inconclusive, Failed };

const char* to_string(Verdict v);

/// Operator on M_n (x) M_n. Coefficients in the product-unit expansion
/// a = sum a_{(ij)(kl)} e_ij (x) e_kl live at mat[(i*n+k)][(j*n+l)].
struct BipartiteOperator {
  std::size_t n = 0;
  ComplexMatrix mat;

  BipartiteOperator() = default;
  BipartiteOperator(std::size_t local_dim, ComplexMatrix m);

  /// a_{(ij)(kl)}
  const Complex& coeff(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return mat(i * n + k, j * n + l);
  }
};

/// alpha * 1(x)1 + beta * V — the image of the twirl projection.
struct WernerForm {
  Complex alpha;
  Complex beta;
};

struct StateCheckReport {
  double s_value = 0.0;
  double t_value = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// S(a) = sum_{ij} a_{(ij)(ij)}. Real for Hermitian input; ranges over [0, n]
/// on densities with the maximum attained by the maximally entangled state.
Complex s_functional(const BipartiteOperator& a);

/// T(a) = sum_{ij} a_{(ij)(ji)} = Tr(a V).
Complex t_functional(const BipartiteOperator& a);

/// V = sum e_ij (x) e_ji; satisfies V(x (x) y) = y (x) x and V^2 = 1.
BipartiteOperator flip(std::size_t n);

/// Rank-1 projection (1/n) sum e_ij (x) e_ij.
BipartiteOperator max_entangled(std::size_t n);

/// Projection onto span{1(x)1, V}: solves alpha*n^2 + beta*n = Tr(a),
/// alpha*n + beta*n^2 = T(a). Throws DimensionTooSmall for n = 1.
WernerForm twirl(const BipartiteOperator& a);

BipartiteOperator reconstruct(const WernerForm& w, std::size_t n);

/// Empirical mean of (U(x)U)* a (U(x)U) over Haar-random U. Output depends
/// only on (a, samples, seed): work is split into fixed 4096-sample blocks
/// with derived per-block seeds and reduced in block order, so any thread
/// count yields bit-identical results.
BipartiteOperator twirl_monte_carlo(const BipartiteOperator& a, std::size_t samples,
                                    std::uint64_t seed, unsigned threads = 1);

/// Haar-distributed unitary: Gram-Schmidt of a Gaussian matrix with positive
/// real diagonal in the triangular factor.
ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);
ComplexMatrix haar_random_unitary(std::size_t n, Rng& rng);

/// Necessary conditions on a separable density: 0 <= S(a) <= 1 and
/// 0 <= T(a) <= 1. A value outside [-tol, 1+tol] certifies entanglement;
/// otherwise the check is inconclusive. Throws NotAState if a is not a
/// density matrix within tol.
StateCheckReport necessary_separability_check(const BipartiteOperator& a,
                                              double tol = kStateTol);

/// Coefficient map a_{(ij)(kl)} -> a_{(ij)(lk)} (transpose on the second
/// factor). Satisfies S(a) = T(partial_transpose(a)) exactly.
BipartiteOperator partial_transpose(const BipartiteOperator& a);

/// True iff partial_transpose(a) is PSD within tol.
bool ppt_check(const BipartiteOperator& a, double tol = kStateTol);

/// Classifies the twirl P(a) of a density a by T(a) alone:
/// Entangled for T < -tol, Separable for T > 1/n + tol, else Inconclusive
/// (the band [0, 1/n] is deliberately left undecided). Throws NotAState.
Verdict werner_separability(const BipartiteOperator& a, double tol = kStateTol);

/// Full-rank random density G G* / Tr(G G*) with Gaussian G.
ComplexMatrix wishart_density(std::size_t dim, Rng& rng);

/// Convex mixture of at most 2n^2 random product densities; weights sampled
/// uniformly from the simplex. Separable by construction.
BipartiteOperator random_separable_density(std::size_t n, Rng& rng);

/// Hermitian, PSD within tol, unit trace within tol.
bool is_density(const ComplexMatrix& mat, double tol = kStateTol);

} // namespace entcert

#endif // ENTCERT_BIPARTITE_HPP
