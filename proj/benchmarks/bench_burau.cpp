#include <benchmark/benchmark.h>

#include <random>

#include "burau/braid.hpp"
#include "burau/forms.hpp"

using namespace burau;

namespace {

BraidWord random_word(int n, int length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord w;
  w.strands = n;
  for (int i = 0; i < length; ++i) {
    const int k = gen(rng);
    w.letters.push_back(sign(rng) ? k : -k);
  }
  return w;
}

}  // namespace

static void BM_BurauEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int length = static_cast<int>(state.range(1));
  const BraidWord w = random_word(n, length, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(burau_matrix(w));
  }
  state.SetComplexityN(length);
}
BENCHMARK(BM_BurauEval)->Args({4, 64})->Args({4, 256})->Args({8, 64})->Args({8, 256});

static void BM_ReducedBurauEval(benchmark::State& state) {
  const BraidWord w = random_word(static_cast<int>(state.range(0)), 128, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_burau_matrix(w));
  }
}
BENCHMARK(BM_ReducedBurauEval)->Arg(4)->Arg(6)->Arg(8);

static void BM_PsiRestriction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix m = burau_matrix(random_word(n, 32, 44));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(m, n));
  }
}
BENCHMARK(BM_PsiRestriction)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
