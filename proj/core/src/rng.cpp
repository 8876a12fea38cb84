// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include "entcert/rng.hpp"

#include <cmath>
#include <numbers>

namespace entcert {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

double Rng::uniform() {
  // Top 53 bits of the engine output give an exactly representable value.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  const double u1 = 1.0 - uniform(); // in (0, 1]; keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(phi);
  has_cached_ = true;
  return r * std::cos(phi);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

ComplexMatrix ginibre_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(n, n, rng);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

} // namespace entcert
