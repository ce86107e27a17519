#include <benchmark/benchmark.h>

#include "memlearn/generators.hpp"
#include "memlearn/halfspace.hpp"

using namespace memlearn;

static void BM_CriticalPoints(benchmark::State& state) {
  Rng rng(11);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  std::size_t cells = 0;
  for (auto _ : state) {
    state.PauseTiming();
    auto fam = random_halfspace_family(rng, dim, m);
    state.ResumeTiming();
    cells = build_halfspace_critical_points(*fam).size();
  }
  state.counters["cells"] = static_cast<double>(cells);
}
BENCHMARK(BM_CriticalPoints)->Args({1, 4})->Args({2, 4})->Args({2, 6})->Args({3, 5});
