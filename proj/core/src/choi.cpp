// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/choi.hpp"

#include <string>
#include <utility>

namespace entcert {

namespace {

void require_map(const MatrixMap& phi, const char* op) {
  if (phi.n == 0 || phi.m == 0 || phi.images.size() != phi.n * phi.n) {
    throw DimensionMismatch(std::string(op) + ": map must carry n^2 images");
  }
  for (const auto& img : phi.images) {
    if (img.rows() != phi.m || img.cols() != phi.m) {
      throw DimensionMismatch(std::string(op) + ": image is not output_dim square");
    }
  }
}

ComplexMatrix unit_matrix(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix e(dim, dim);
  e(i, j) = 1.0;
  return e;
}

} // namespace

MatrixMap::MatrixMap(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> imgs)
    : n(in_dim), m(out_dim), images(std::move(imgs)) {
  require_map(*this, "MatrixMap");
}

bool MatrixMap::is_hermiticity_preserving(double tol) const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (max_abs_diff(image(i, j), adjoint(image(j, i))) > tol) return false;
    }
  }
  return true;
}

BipartiteOperator ChoiMatrix::as_bipartite() const {
  if (input_dim != output_dim) {
    throw DimensionMismatch("ChoiMatrix::as_bipartite: local dimensions differ");
  }
  return BipartiteOperator(input_dim, mat);
}

ChoiMatrix choi(const MatrixMap& phi) {
  require_map(phi, "choi");
  ChoiMatrix c;
  c.input_dim = phi.n;
  c.output_dim = phi.m;
  c.mat = ComplexMatrix(phi.n * phi.m, phi.n * phi.m);
  for (std::size_t i = 0; i < phi.n; ++i)
    for (std::size_t j = 0; j < phi.n; ++j) {
      const ComplexMatrix& img = phi.image(i, j);
      for (std::size_t k = 0; k < phi.m; ++k)
        for (std::size_t l = 0; l < phi.m; ++l)
          c.mat(i * phi.m + k, j * phi.m + l) = img(k, l);
    }
  return c;
}

MatrixMap map_from_choi(const ChoiMatrix& c) {
  const std::size_t n = c.input_dim;
  const std::size_t m = c.output_dim;
  if (n == 0 || m == 0 || c.mat.rows() != n * m || c.mat.cols() != n * m) {
    throw DimensionMismatch("map_from_choi: matrix size inconsistent with local dims");
  }
  std::vector<ComplexMatrix> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix img(m, m);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) img(k, l) = c.mat(i * m + k, j * m + l);
      images[i * n + j] = std::move(img);
    }
  return MatrixMap(n, m, std::move(images));
}

ComplexMatrix apply(const MatrixMap& phi, const ComplexMatrix& x) {
  require_map(phi, "apply");
  if (x.rows() != phi.n || x.cols() != phi.n) {
    throw DimensionMismatch("apply: argument shape does not match input dimension");
  }
  ComplexMatrix out(phi.m, phi.m);
  for (std::size_t i = 0; i < phi.n; ++i)
    for (std::size_t j = 0; j < phi.n; ++j) {
      const Complex xij = x(i, j);
      if (xij == Complex(0.0, 0.0)) continue;
      out += xij * phi.image(i, j);
    }
  return out;
}

MatrixMap compose(const MatrixMap& phi, const MatrixMap& psi) {
  require_map(phi, "compose");
  require_map(psi, "compose");
  if (phi.n != psi.m) throw DimensionMismatch("compose: inner dimensions differ");
  std::vector<ComplexMatrix> images(psi.n * psi.n);
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    images[idx] = apply(phi, psi.images[idx]);
  }
  return MatrixMap(psi.n, phi.m, std::move(images));
}

MatrixMap add(const MatrixMap& phi, const MatrixMap& psi) {
  require_map(phi, "add");
  require_map(psi, "add");
  if (phi.n != psi.n || phi.m != psi.m) throw DimensionMismatch("add: map shapes differ");
  std::vector<ComplexMatrix> images(phi.images);
  for (std::size_t idx = 0; idx < images.size(); ++idx) images[idx] += psi.images[idx];
  return MatrixMap(phi.n, phi.m, std::move(images));
}

MatrixMap scale(const MatrixMap& phi, Complex factor) {
  require_map(phi, "scale");
  std::vector<ComplexMatrix> images(phi.images);
  for (auto& img : images) img *= factor;
  return MatrixMap(phi.n, phi.m, std::move(images));
}

MatrixMap trace_map(std::size_t n) {
  std::vector<ComplexMatrix> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      images[i * n + j] = i == j ? ComplexMatrix::identity(n) : ComplexMatrix(n, n);
  return MatrixMap(n, n, std::move(images));
}

MatrixMap identity_map(std::size_t n) {
  std::vector<ComplexMatrix> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i * n + j] = unit_matrix(n, i, j);
  return MatrixMap(n, n, std::move(images));
}

MatrixMap transpose_map(std::size_t n) {
  std::vector<ComplexMatrix> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i * n + j] = unit_matrix(n, j, i);
  return MatrixMap(n, n, std::move(images));
}

MatrixMap ad(const ComplexMatrix& v) {
  const std::size_t n = v.rows();
  const std::size_t m = v.cols();
  if (n == 0 || m == 0) throw DimensionMismatch("ad: empty matrix");
  const ComplexMatrix vadj = adjoint(v);
  std::vector<ComplexMatrix> images(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i * n + j] = vadj * unit_matrix(n, i, j) * v;
  return MatrixMap(n, m, std::move(images));
}

double dual_pairing(const MatrixMap& psi, const MatrixMap& phi) {
  if (psi.n != phi.n || psi.m != phi.m) {
    throw DimensionMismatch("dual_pairing: map shapes differ");
  }
  const ComplexMatrix cpsi = choi(psi).mat;
  const ComplexMatrix cphi = choi(phi).mat;
  return trace(cpsi * cphi).real();
}

SuperPositiveVerdict super_positive_threshold_verdict(double c, std::size_t n,
                                                      MapVariant variant) {
  const MatrixMap second =
      variant == MapVariant::Transpose ? transpose_map(n) : identity_map(n);
  MatrixMap candidate = add(scale(trace_map(n), Complex(c, 0.0)), second);
  // Composing with the transpose leaves Choi separability unchanged, so the
  // transposed variant is witnessed through c*Tr + id as well.
  if (variant == MapVariant::Transpose) candidate = compose(candidate, transpose_map(n));
  const MatrixMap dual_test = add(trace_map(n), scale(identity_map(n), Complex(-1.0, 0.0)));
  SuperPositiveVerdict verdict;
  verdict.super_positive = c >= 1.0;
  verdict.witness = dual_pairing(candidate, dual_test);
  return verdict;
}

MatrixMap trace_augmented_map(const MatrixMap& phi) {
  require_map(phi, "trace_augmented_map");
  ComplexMatrix phi_one(phi.m, phi.m);
  for (std::size_t i = 0; i < phi.n; ++i) phi_one += phi.image(i, i);
  std::vector<ComplexMatrix> images(phi.images);
  for (std::size_t i = 0; i < phi.n; ++i) images[i * phi.n + i] += phi_one;
  return MatrixMap(phi.n, phi.m, std::move(images));
}

} // namespace entcert
