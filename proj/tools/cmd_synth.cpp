#include <fstream>
#include <iostream>

#include "common.hpp"
#include "memlearn/errors.hpp"
#include "memlearn/pattern.hpp"
#include "memlearn/transcript.hpp"

namespace memlearn::cli {

namespace {

struct SynthOptions {
  std::string chart;
  std::string teacher = "prompt";
  std::string out;
  std::string sidecar;
  std::string transcript;
  bool json = false;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
}

int run_synth(const SynthOptions& o) {
  const Chart seed = load_chart(o.chart);
  auto family = seed_family(seed);
  auto teacher = make_teacher(o.teacher, family, Mode::And, true);
  const auto result = synthesize(seed, *teacher);
  if (!o.out.empty()) write_file(o.out, result.program.source_text);
  if (!o.transcript.empty()) save_transcript(o.transcript, result.run.transcript);
  const auto sidecar = sidecar_json(result, o.transcript);
  if (!o.sidecar.empty()) write_file(o.sidecar, sidecar.dump(2) + "\n");
  if (o.json) {
    auto j = sidecar;
    j["program"] = result.program.source_text;
    print_json(j);
    return kOk;
  }
  std::cout << result.program.source_text;
  std::cout << "queries: " << result.run.queries << " (bound " << seed.size() * seed.size() << ")\n";
  return kOk;
}

}  // namespace

void add_synth(CLI::App& app) {
  auto o = std::make_shared<SynthOptions>();
  auto* sub = app.add_subcommand("synth", "Synthesize a pattern-detection program from a seed chart");
  sub->add_option("--chart", o->chart, "Seed chart CSV (index,value)")->required()->check(CLI::ExistingFile);
  sub->add_option("--teacher", o->teacher, "simulated:<target.json> | scripted:<answers> | prompt");
  sub->add_option("--out", o->out, "Write the DSL program here");
  sub->add_option("--sidecar", o->sidecar, "Write the JSON sidecar here");
  sub->add_option("--transcript", o->transcript, "Write the run as NDJSON");
  sub->add_flag("--json", o->json, "JSON output");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_synth(*o); }); });
}

}  // namespace memlearn::cli
