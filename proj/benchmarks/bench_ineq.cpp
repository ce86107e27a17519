#include <benchmark/benchmark.h>

#include "memlearn/generators.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/learner.hpp"

using namespace memlearn;

static void BM_LearnIneqTrue(benchmark::State& state) {
  Rng rng(9);
  auto fam = random_acyclic_ineq(rng, static_cast<std::size_t>(state.range(0)), 0.5);
  for (auto _ : state) {
    SimulatedTeacher teacher(fam, PredicateSet{}, Mode::And);
    benchmark::DoNotOptimize(learn_ineq(fam, teacher));
  }
  state.counters["pairs"] = static_cast<double>(fam->size());
}
BENCHMARK(BM_LearnIneqTrue)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumerateMaxAcyclic(benchmark::State& state) {
  Rng rng(10);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto edges = random_digraph(rng, n, 0.4);
  if (edges.size() > 18) edges.resize(18);
  std::size_t found = 0;
  for (auto _ : state) found = enumerate_max_acyclic(n, edges).size();
  state.counters["edges"] = static_cast<double>(edges.size());
  state.counters["subgraphs"] = static_cast<double>(found);
}
BENCHMARK(BM_EnumerateMaxAcyclic)->Arg(4)->Arg(5)->Arg(6);
