// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#include <benchmark/benchmark.h>

#include "entcert/eigen.hpp"
#include "entcert/hakye.hpp"
#include "entcert/spa.hpp"

namespace {

using namespace entcert;

void BM_HermitianEigen9(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix a = random_hermitian(9, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(a));
  }
}
BENCHMARK(BM_HermitianEigen9);

void BM_Kron3x3(benchmark::State& state) {
  Rng rng(2);
  const ComplexMatrix u = haar_random_unitary(3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(u, u));
  }
}
BENCHMARK(BM_Kron3x3);

// One Haar sample of the twirl average: draw, lift, conjugate.
void BM_TwirlSample(benchmark::State& state) {
  Rng rng(3);
  const BipartiteOperator a(3, wishart_density(9, rng));
  for (auto _ : state) {
    const ComplexMatrix u = haar_random_unitary(3, rng);
    const ComplexMatrix uu = kron(u, u);
    benchmark::DoNotOptimize(adjoint(uu) * a.mat * uu);
  }
}
BENCHMARK(BM_TwirlSample);

void BM_TwirlMonteCarloBlock(benchmark::State& state) {
  Rng rng(4);
  const BipartiteOperator a(3, wishart_density(9, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(twirl_monte_carlo(a, 4096, 7, 1));
  }
}
BENCHMARK(BM_TwirlMonteCarloBlock)->Unit(benchmark::kMillisecond);

void BM_SpaCertificate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(spa_entanglement_certificate(transpose_map(3)));
  }
}
BENCHMARK(BM_SpaCertificate);

void BM_Counterexample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(counterexample(0.1));
  }
}
BENCHMARK(BM_Counterexample)->Unit(benchmark::kMillisecond);

void BM_PartialTranspose9(benchmark::State& state) {
  Rng rng(5);
  const BipartiteOperator a(3, wishart_density(9, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_transpose(a));
  }
}
BENCHMARK(BM_PartialTranspose9);

} // namespace

BENCHMARK_MAIN();
