#include <iostream>

#include "common.hpp"
#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/opt.hpp"
#include "memlearn/transcript.hpp"

namespace memlearn::cli {

namespace {

struct LearnOptions {
  std::string family;
  std::string mode = "or";
  std::string teacher;
  std::string transcript;
  std::size_t hasse_cap = 2000;
  bool opt = false;
  bool json = false;
};

int run_learn(const LearnOptions& o) {
  auto family = load_family(o.family);
  const Mode mode = parse_mode(o.mode);
  auto lattice = make_lattice(family, mode);
  auto teacher = make_teacher(o.teacher, family, mode);
  const auto run = learn(lattice, *teacher);
  if (!o.transcript.empty()) save_transcript(o.transcript, run.transcript);

  std::optional<HasseDiagram> diagram;
  try {
    diagram = build_hasse(*lattice, o.hasse_cap);
  } catch (const GuardExceeded&) {
  }
  std::optional<std::size_t> opt;
  if (o.opt) opt = opt_bruteforce(*lattice, OptCaps{16, 16});
  const auto report = make_bound_report(run, *lattice, diagram ? &*diagram : nullptr, opt);

  if (o.json) {
    nlohmann::json bound{{"queries_used", report.queries_used}, {"bound_upper", report.bound_upper}};
    if (report.lattice_size) bound["lattice_size"] = *report.lattice_size;
    if (report.max_descendants_exact) bound["max_descendants"] = *report.max_descendants_exact;
    if (report.bound_lower_info) bound["bound_lower_info"] = *report.bound_lower_info;
    if (report.opt_exact) bound["opt"] = *report.opt_exact;
    print_json({{"result", representative_json(run.result, *family)},
                {"queries", run.queries},
                {"rounds", run.rounds},
                {"cache_hits", run.cache_hits},
                {"bound", std::move(bound)}});
    return kOk;
  }
  std::cout << "result: " << to_string(run.result.set) << '\n';
  std::cout << "formula: " << names_of(run.result.set, *family, mode) << '\n';
  std::cout << "queries: " << run.queries << '\n';
  std::cout << "rounds: " << run.rounds << '\n';
  std::cout << "bound_upper: " << report.bound_upper << '\n';
  if (report.lattice_size) std::cout << "lattice_size: " << *report.lattice_size << '\n';
  if (report.max_descendants_exact) std::cout << "max_descendants: " << *report.max_descendants_exact << '\n';
  if (report.bound_lower_info) std::cout << "bound_lower_info: " << *report.bound_lower_info << '\n';
  if (report.opt_exact) std::cout << "opt: " << *report.opt_exact << '\n';
  return kOk;
}

}  // namespace

void add_learn(CLI::App& app) {
  auto o = std::make_shared<LearnOptions>();
  auto* sub = app.add_subcommand("learn", "Learn a target representative from membership queries");
  sub->add_option("--family", o->family, "Family file (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--mode", o->mode, "or | and")->check(CLI::IsMember({"or", "and"}));
  sub->add_option("--teacher", o->teacher, "simulated:<target.json> | scripted:<answers> | prompt")->required();
  sub->add_option("--transcript", o->transcript, "Write the run as NDJSON");
  sub->add_option("--hasse-cap", o->hasse_cap, "Largest lattice materialized for the bound report");
  sub->add_flag("--opt", o->opt, "Also compute the exact minimax query count (tiny lattices)");
  sub->add_flag("--json", o->json, "JSON output");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_learn(*o); }); });
}

}  // namespace memlearn::cli
