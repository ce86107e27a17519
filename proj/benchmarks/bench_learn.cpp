#include <benchmark/benchmark.h>

#include "memlearn/generators.hpp"
#include "memlearn/learner.hpp"

using namespace memlearn;

// Full learning run on a random table family, target drawn from the lattice.
static void BM_LearnTable(benchmark::State& state) {
  const auto nf = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  auto fam = random_table_family(rng, nf, 16);
  auto lat = make_lattice(fam, Mode::Or);
  auto h = build_hasse(*lat);
  std::size_t i = 0;
  for (auto _ : state) {
    SimulatedTeacher teacher(fam, h.nodes[i++ % h.nodes.size()].set, Mode::Or);
    benchmark::DoNotOptimize(learn(lat, teacher));
  }
  state.counters["lattice"] = static_cast<double>(h.nodes.size());
}
BENCHMARK(BM_LearnTable)->Arg(4)->Arg(8)->Arg(12);

static void BM_BuildHasseTable(benchmark::State& state) {
  Rng rng(8);
  auto fam = random_table_family(rng, static_cast<std::size_t>(state.range(0)), 16);
  auto lat = make_lattice(fam, Mode::Or);
  for (auto _ : state) benchmark::DoNotOptimize(build_hasse(*lat));
}
BENCHMARK(BM_BuildHasseTable)->Arg(4)->Arg(8);
