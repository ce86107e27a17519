#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "memlearn/learner.hpp"

namespace memlearn::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kValidation = 2, kTeacher = 3, kGuard = 4 };

// Runs a command body, printing library errors to stderr and mapping them to
// exit codes.
int run_guarded(const std::function<int()>& body);

// Set by the subcommand callback; returned from main.
int& exit_status();

// "simulated:<target.json>", "scripted:<answers>", or "prompt". Scripted
// files are either transcripts (NDJSON) or one 0/1 per line. pattern_mode
// switches the prompt to chart rendering.
std::unique_ptr<Teacher> make_teacher(const std::string& spec, std::shared_ptr<const PredicateFamily> family,
                                      Mode mode, bool pattern_mode = false);

std::vector<TranscriptEntry> load_script(const std::string& path);

nlohmann::json representative_json(const Representative& rep, const PredicateFamily& family);
std::string names_of(const PredicateSet& s, const PredicateFamily& family, Mode mode);

// Sparkline rendering of a chart, one block character per point.
std::string sparkline(const Assignment& a);

void print_json(const nlohmann::json& j);

void add_learn(CLI::App& app);
void add_lattice(CLI::App& app);
void add_enum(CLI::App& app);
void add_synth(CLI::App& app);
void add_serve(CLI::App& app);
void add_bench(CLI::App& app);

}  // namespace memlearn::cli
