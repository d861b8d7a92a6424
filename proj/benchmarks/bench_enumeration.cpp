#include <benchmark/benchmark.h>

#include "burau/braid.hpp"
#include "burau/lifting.hpp"
#include "burau/modgroup.hpp"
#include "burau/modmatrix.hpp"

using namespace burau;

namespace {

std::vector<ModMatrix> burau_gens_mod(int n, std::uint32_t level) {
  std::vector<ModMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(reduce(burau_sigma(n, i), level));
  return gens;
}

}  // namespace

// BFS closure of the braid image; the dominant cost of every theorem check.
static void BM_CloseBurauImage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint32_t level = static_cast<std::uint32_t>(state.range(1));
  const auto gens = burau_gens_mod(n, level);
  std::size_t order = 0;
  for (auto _ : state) {
    const GroupSet g = close(gens);
    order = g.size();
    benchmark::DoNotOptimize(order);
  }
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_CloseBurauImage)->Args({4, 4})->Args({4, 6})->Args({5, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SpGroup(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const std::uint32_t level = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp_group(g, level));
  }
}
BENCHMARK(BM_SpGroup)->Args({1, 5})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EncodeDecode(benchmark::State& state) {
  const ModMatrix m = reduce(burau_matrix(parse_word("1 2 3 -1 -2 2", 4)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(encode(m), m.dim(), m.modulus()));
  }
}
BENCHMARK(BM_EncodeDecode);

static void BM_SpLift(benchmark::State& state) {
  // lift every element of SL_2(Z/5) in rotation; table construction is
  // amortized away after the first iteration
  const GroupSet g = sp_group(1, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp_lift(g.element(i % g.size()), 1));
    ++i;
  }
}
BENCHMARK(BM_SpLift);

BENCHMARK_MAIN();
