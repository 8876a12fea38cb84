// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace entcert {

namespace {

constexpr std::size_t kTwirlBlock = 4096;

void require_local_dim(const BipartiteOperator& a) {
  if (a.n == 0 || a.mat.rows() != a.n * a.n || a.mat.cols() != a.n * a.n) {
    throw DimensionMismatch("bipartite operator: matrix is not local_dim^2 square");
  }
}

void require_density(const BipartiteOperator& a, double tol, const char* op) {
  require_local_dim(a);
  if (!a.mat.is_hermitian(tol)) throw NotAState(std::string(op) + ": input not Hermitian");
  if (std::abs(trace(a.mat) - Complex(1.0, 0.0)) > tol) {
    throw NotAState(std::string(op) + ": trace differs from 1");
  }
  if (!is_psd(a.mat, tol)) throw NotAState(std::string(op) + ": input not positive semidefinite");
}

} // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Separable: return "Separable";
    case Verdict::Entangled: return "Entangled";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Failed: return "Failed";
  }
  return "Unknown";
}

BipartiteOperator::BipartiteOperator(std::size_t local_dim, ComplexMatrix m)
    : n(local_dim), mat(std::move(m)) {
  require_local_dim(*this);
}

Complex s_functional(const BipartiteOperator& a) {
  require_local_dim(a);
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) s += a.coeff(i, j, i, j);
  return s;
}

Complex t_functional(const BipartiteOperator& a) {
  require_local_dim(a);
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) t += a.coeff(i, j, j, i);
  return t;
}

BipartiteOperator flip(std::size_t n) {
  ComplexMatrix v(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i * n + j, j * n + i) = 1.0;
  return BipartiteOperator(n, std::move(v));
}

BipartiteOperator max_entangled(std::size_t n) {
  ComplexMatrix e(n * n, n * n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i * n + i, j * n + j) = w;
  return BipartiteOperator(n, std::move(e));
}

WernerForm twirl(const BipartiteOperator& a) {
  require_local_dim(a);
  if (a.n < 2) throw DimensionTooSmall("twirl: local dimension must be at least 2");
  const double n = static_cast<double>(a.n);
  const Complex tr = trace(a.mat);
  const Complex t = t_functional(a);
  const double den = n * (n * n - 1.0);
  return WernerForm{(n * tr - t) / den, (n * t - tr) / den};
}

BipartiteOperator reconstruct(const WernerForm& w, std::size_t n) {
  ComplexMatrix out = w.alpha * ComplexMatrix::identity(n * n);
  out += w.beta * flip(n).mat;
  return BipartiteOperator(n, std::move(out));
}

ComplexMatrix haar_random_unitary(std::size_t n, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(n, n, rng);
  ComplexMatrix q(n, n);
  // Modified Gram-Schmidt with one reorthogonalization pass. The triangular
  // factor then has positive real diagonal, which makes Q exactly Haar.
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) v[i] = g(i, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex proj(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, j)) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, j);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(v[i]);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) = v[i] / norm;
  }
  return q;
}

ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(n, rng);
}

BipartiteOperator twirl_monte_carlo(const BipartiteOperator& a, std::size_t samples,
                                    std::uint64_t seed, unsigned threads) {
  require_local_dim(a);
  if (samples == 0) throw DimensionMismatch("twirl_monte_carlo: samples must be >= 1");
  const std::size_t n = a.n;
  const std::size_t blocks = (samples + kTwirlBlock - 1) / kTwirlBlock;

  std::vector<ComplexMatrix> block_sums(blocks);
  auto run_blocks = [&](std::size_t first, std::size_t last) {
    for (std::size_t b = first; b < last; ++b) {
      Rng rng(derive_stream(seed, b));
      const std::size_t count = std::min(kTwirlBlock, samples - b * kTwirlBlock);
      ComplexMatrix sum(n * n, n * n);
      for (std::size_t s = 0; s < count; ++s) {
        const ComplexMatrix u = haar_random_unitary(n, rng);
        const ComplexMatrix uu = kron(u, u);
        sum += adjoint(uu) * a.mat * uu;
      }
      block_sums[b] = std::move(sum);
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), blocks);
  if (workers == 1) {
    run_blocks(0, blocks);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (blocks + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(blocks, first + chunk);
      if (first >= last) break;
      pool.emplace_back(run_blocks, first, last);
    }
    for (auto& t : pool) t.join();
  }

  // Reduction in block order keeps the result independent of thread count.
  ComplexMatrix total(n * n, n * n);
  for (std::size_t b = 0; b < blocks; ++b) total += block_sums[b];
  total *= Complex(1.0 / static_cast<double>(samples), 0.0);
  return BipartiteOperator(n, std::move(total));
}

StateCheckReport necessary_separability_check(const BipartiteOperator& a, double tol) {
  require_density(a, tol, "necessary_separability_check");
  StateCheckReport report;
  report.s_value = s_functional(a).real();
  report.t_value = t_functional(a).real();
  const bool outside = report.s_value < -tol || report.s_value > 1.0 + tol ||
                       report.t_value < -tol || report.t_value > 1.0 + tol;
  report.verdict = outside ? Verdict::Entangled : Verdict::Inconclusive;
  return report;
}

BipartiteOperator partial_transpose(const BipartiteOperator& a) {
  require_local_dim(a);
  const std::size_t n = a.n;
  ComplexMatrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          out(i * n + k, j * n + l) = a.mat(i * n + l, j * n + k);
  return BipartiteOperator(n, std::move(out));
}

bool ppt_check(const BipartiteOperator& a, double tol) {
  return is_psd(partial_transpose(a).mat, tol);
}

Verdict werner_separability(const BipartiteOperator& a, double tol) {
  require_density(a, tol, "werner_separability");
  const double t = t_functional(a).real();
  if (t < -tol) return Verdict::Entangled;
  if (t > 1.0 / static_cast<double>(a.n) + tol) return Verdict::Separable;
  return Verdict::Inconclusive;
}

ComplexMatrix wishart_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(dim, dim, rng);
  ComplexMatrix w = g * adjoint(g);
  w *= Complex(1.0 / trace(w).real(), 0.0);
  return w;
}

BipartiteOperator random_separable_density(std::size_t n, Rng& rng) {
  const std::size_t max_terms = 2 * n * n;
  const std::size_t terms =
      1 + std::min<std::size_t>(max_terms - 1,
                                static_cast<std::size_t>(rng.uniform() * max_terms));
  // Exponential spacings normalized to 1 sample the simplex uniformly.
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.uniform());
    total += w;
  }
  ComplexMatrix sum(n * n, n * n);
  for (const double w : weights) {
    const ComplexMatrix b = wishart_density(n, rng);
    const ComplexMatrix c = wishart_density(n, rng);
    sum += Complex(w / total, 0.0) * kron(b, c);
  }
  return BipartiteOperator(n, std::move(sum));
}

bool is_density(const ComplexMatrix& mat, double tol) {
  if (!mat.is_square() || !mat.is_hermitian(tol)) return false;
  if (std::abs(trace(mat) - Complex(1.0, 0.0)) > tol) return false;
  return is_psd(mat, tol);
}

} // namespace entcert
