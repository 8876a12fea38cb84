// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_CHOI_HPP
#define ENTCERT_CHOI_HPP

#include <vector>

#include "entcert/bipartite.hpp"
#include "entcert/matrix.hpp"

namespace entcert {

/// Hermiticity predicate tolerance for maps: image(i,j) == image(j,i)*.
inline constexpr double kMapHermTol = 1e-10;

/// Linear map M_n -> M_m stored by its action on matrix units, so that
/// composition and evaluation are exact at these sizes.
struct MatrixMap {
  std::size_t n = 0;                 ///< input dimension
  std::size_t m = 0;                 ///< output dimension
  std::vector<ComplexMatrix> images; ///< images[i*n+j] = value on e_ij

  MatrixMap() = default;
  MatrixMap(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> imgs);

  const ComplexMatrix& image(std::size_t i, std::size_t j) const { return images[i * n + j]; }

  bool is_hermiticity_preserving(double tol = kMapHermTol) const;
};

/// C = sum e_ij (x) phi(e_ij), an (n*m) x (n*m) matrix. The map is
/// completely positive exactly when this matrix is PSD.
struct ChoiMatrix {
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  ComplexMatrix mat;

  /// View as an operator on M_n (x) M_n; requires input_dim == output_dim.
  BipartiteOperator as_bipartite() const;
};

ChoiMatrix choi(const MatrixMap& phi);
MatrixMap map_from_choi(const ChoiMatrix& c);

ComplexMatrix apply(const MatrixMap& phi, const ComplexMatrix& x);

/// compose(phi, psi)(x) = phi(psi(x)).
MatrixMap compose(const MatrixMap& phi, const MatrixMap& psi);
MatrixMap add(const MatrixMap& phi, const MatrixMap& psi);
MatrixMap scale(const MatrixMap& phi, Complex factor);

/// x -> Tr(x) * 1_n.
MatrixMap trace_map(std::size_t n);
MatrixMap identity_map(std::size_t n);
MatrixMap transpose_map(std::size_t n);

/// x -> V* x V; V may be rectangular (rows = input dim, cols = output dim).
MatrixMap ad(const ComplexMatrix& v);

/// Tr(C_psi C_phi). Negative against a positive map phi certifies that psi
/// is not super-positive (its Choi matrix is not separable).
double dual_pairing(const MatrixMap& psi, const MatrixMap& phi);

enum class MapVariant { Transpose, Identity };

struct SuperPositiveVerdict {
  bool super_positive = false;
  /// Pairing of the map (transposed variant composed with t first) against
  /// Tr - id; equals (c-1)(n^2-n), negative exactly below the threshold.
  double witness = 0.0;
};

/// Threshold classification of c*Tr + t and c*Tr + id: super-positive
/// exactly when c >= 1.
SuperPositiveVerdict super_positive_threshold_verdict(double c, std::size_t n,
                                                      MapVariant variant);

/// x -> phi(1)*Tr(x) + phi(x). For positive phi the result is super-positive;
/// the testable consequences here are that its Choi matrix is PSD and PPT.
MatrixMap trace_augmented_map(const MatrixMap& phi);

} // namespace entcert

#endif // ENTCERT_CHOI_HPP
