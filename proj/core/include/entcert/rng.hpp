// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef ENTCERT_RNG_HPP
#define ENTCERT_RNG_HPP

#include <cstdint>
#include <random>

#include "entcert/matrix.hpp"

namespace entcert {

/// splitmix64 finalizer; used to derive decorrelated per-block seeds so that
/// parallel Monte-Carlo runs are reproducible for any worker count.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the index-th sub-stream of a master seed.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// Deterministic random source. Every sampling routine in the library takes
/// its randomness from here, so a seed fully determines all outputs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();

  /// Standard normal (Box-Muller; swallows one uniform pair per two calls).
  double gaussian();

  /// Re + i*Im with independent standard normal parts.
  Complex complex_gaussian();

private:
  std::mt19937_64 engine_;
  double cached_gaussian_ = 0.0;
  bool has_cached_ = false;
};

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Random Hermitian matrix (G + G*)/2 with Gaussian G.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

} // namespace entcert

#endif // ENTCERT_RNG_HPP
