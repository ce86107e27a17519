#include <chrono>
#include <iostream>

#include "common.hpp"
#include "memlearn/errors.hpp"
#include "memlearn/generators.hpp"

namespace memlearn::cli {

namespace {

struct BenchOptions {
  std::string kind = "ineq";
  std::size_t families = 50;
  std::size_t n = 5;
  double density = 0.5;
  std::uint64_t seed = 1;
  bool json = false;
};

// Learns every representative of each random family and compares the query
// count with the family's bound: |I| for acyclic inequality families,
// |F| times the widest fan-out otherwise.
int run_bench(const BenchOptions& o) {
  Rng rng(o.seed);
  std::size_t runs = 0, violations = 0, max_queries = 0, total_queries = 0;
  double worst_ratio = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < o.families; ++i) {
    std::shared_ptr<const PredicateFamily> family;
    Mode mode = Mode::Or;
    if (o.kind == "ineq") {
      family = random_acyclic_ineq(rng, o.n, o.density);
      mode = Mode::And;
    } else if (o.kind == "table") {
      std::uniform_int_distribution<std::size_t> fs(1, o.n);
      family = random_table_family(rng, fs(rng), 8);
    } else {
      throw ValidationError("bench kind must be ineq or table");
    }
    auto lattice = make_lattice(family, mode);
    const auto diagram = build_hasse(*lattice);
    const std::size_t bound =
        o.kind == "ineq" ? family->size() : family->size() * std::max<std::size_t>(1, diagram.max_out_degree());
    for (const auto& node : diagram.nodes) {
      SimulatedTeacher teacher(family, node.set, mode);
      const auto run = learn(lattice, teacher);
      ++runs;
      total_queries += run.queries;
      max_queries = std::max(max_queries, run.queries);
      worst_ratio = std::max(worst_ratio, static_cast<double>(run.queries) / static_cast<double>(bound));
      if (run.queries > bound || !lattice->equal(run.result.set, node.set)) ++violations;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    print_json({{"kind", o.kind},
                {"families", o.families},
                {"runs", runs},
                {"max_queries", max_queries},
                {"mean_queries", runs ? static_cast<double>(total_queries) / static_cast<double>(runs) : 0.0},
                {"worst_ratio_to_bound", worst_ratio},
                {"violations", violations},
                {"seconds", secs}});
  } else {
    std::cout << "kind: " << o.kind << '\n'
              << "families: " << o.families << '\n'
              << "runs: " << runs << '\n'
              << "max_queries: " << max_queries << '\n'
              << "worst_ratio_to_bound: " << worst_ratio << '\n'
              << "violations: " << violations << '\n'
              << "seconds: " << secs << '\n';
  }
  return violations == 0 ? kOk : kFailure;
}

}  // namespace

void add_bench(CLI::App& app) {
  auto o = std::make_shared<BenchOptions>();
  auto* sub = app.add_subcommand("bench", "Sweep random families, recording queries against bounds");
  sub->add_option("--kind", o->kind, "ineq | table")->check(CLI::IsMember({"ineq", "table"}));
  sub->add_option("--families", o->families, "Number of random families");
  sub->add_option("--n", o->n, "Variables (ineq) or maximum family size (table)");
  sub->add_option("--density", o->density, "Pair density for ineq families");
  sub->add_option("--seed", o->seed, "Random seed");
  sub->add_flag("--json", o->json, "JSON output");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_bench(*o); }); });
}

}  // namespace memlearn::cli
