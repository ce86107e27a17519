#include "common.hpp"

int main(int argc, char** argv) {
  CLI::App app{"memlearn: exact learning of predicate disjunctions and conjunctions from membership queries"};
  app.require_subcommand(1);
  memlearn::cli::add_learn(app);
  memlearn::cli::add_lattice(app);
  memlearn::cli::add_enum(app);
  memlearn::cli::add_synth(app);
  memlearn::cli::add_serve(app);
  memlearn::cli::add_bench(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : memlearn::cli::kValidation;
  }
  return memlearn::cli::exit_status();
}
