#include <benchmark/benchmark.h>

#include "pairstab/chambers.hpp"
#include "pairstab/gitweights.hpp"
#include "pairstab/polynomial.hpp"

using namespace pairstab;

namespace {

BasisProfile profile_for(int p) {
  BasisProfile b;
  b.p = p;
  b.r = p / 2;
  b.ell = 2;
  for (int j = 0; j < b.r; ++j) b.K.push_back(2 * j + 1);
  return b;
}

void BM_HilbertTable(benchmark::State& state) {
  const auto profile = profile_for(static_cast<int>(state.range(0)));
  const Rational eta = ratio(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_verdict(profile, eta, Mode::semistable));
}
BENCHMARK(BM_HilbertTable)->DenseRange(2, 8, 2);

void BM_BruteForce(benchmark::State& state) {
  const auto profile = profile_for(static_cast<int>(state.range(0)));
  const Rational eta = ratio(3, 2);
  const int bound = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_verdict(profile, eta, bound, Mode::semistable));
}
BENCHMARK(BM_BruteForce)->Args({2, 6})->Args({4, 4})->Args({4, 6})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_WallSet(benchmark::State& state) {
  const Rational d = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(wall_set(static_cast<int>(state.range(1)), d));
}
BENCHMARK(BM_WallSet)->Args({5, 2})->Args({50, 4})->Args({500, 8});

void BM_EventualOrder(benchmark::State& state) {
  Polynomial a, b;
  for (long k = 0; k <= state.range(0); ++k) {
    a = a + Polynomial::monomial(ratio(k + 1, k + 2), static_cast<int>(k));
    b = b + Polynomial::monomial(ratio(k + 1, k + 2), static_cast<int>(k));
  }
  b = b + Polynomial::constant(ratio(1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(eventually_lt(a, b));
}
BENCHMARK(BM_EventualOrder)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
