#include <iostream>
#include <sstream>

#include "common.hpp"
#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/ineq.hpp"

namespace memlearn::cli {

namespace {

struct EnumOptions {
  std::string family;
  std::size_t n = 0;
  std::string edges;
  std::size_t guard = kDefaultEnumerationGuard;
  bool json = false;
};

// "1,2 2,3 3,1"
std::vector<VarPair> parse_edges(const std::string& text) {
  std::vector<VarPair> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) throw ValidationError("edge \"" + tok + "\" must look like i,j");
    try {
      out.push_back({std::stoul(tok.substr(0, comma)), std::stoul(tok.substr(comma + 1))});
    } catch (const std::logic_error&) {
      throw ValidationError("edge \"" + tok + "\" must look like i,j");
    }
  }
  return out;
}

int run_enum(const EnumOptions& o) {
  std::shared_ptr<const IneqFamily> fam;
  if (!o.family.empty()) {
    fam = std::dynamic_pointer_cast<const IneqFamily>(load_family(o.family));
    if (!fam) throw ValidationError("enum needs a var_ineq family");
  } else {
    if (o.n == 0 || o.edges.empty()) throw ValidationError("give --family, or --n with --edges");
    fam = std::make_shared<IneqFamily>(o.n, parse_edges(o.edges));
  }
  const auto subsets = enumerate_max_acyclic(*fam, o.guard);
  if (o.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : subsets) {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& p : fam->pairs_of(s)) edges.push_back({p.from, p.to});
      out.push_back(std::move(edges));
    }
    print_json({{"count", subsets.size()}, {"subgraphs", std::move(out)}});
    return kOk;
  }
  for (const auto& s : subsets) {
    std::string line;
    for (const auto& p : fam->pairs_of(s)) {
      if (!line.empty()) line += ' ';
      line += std::to_string(p.from) + "," + std::to_string(p.to);
    }
    std::cout << line << '\n';
  }
  std::cerr << subsets.size() << " maximal acyclic subgraph" << (subsets.size() == 1 ? "" : "s") << "\n";
  return kOk;
}

}  // namespace

void add_enum(CLI::App& app) {
  auto o = std::make_shared<EnumOptions>();
  auto* sub = app.add_subcommand("enum", "Enumerate maximal acyclic subgraphs as edge lists");
  sub->add_option("--family", o->family, "var_ineq family file")->check(CLI::ExistingFile);
  sub->add_option("--n", o->n, "Vertex count when giving edges inline");
  sub->add_option("--edges", o->edges, "Edges as \"i,j i,j ...\"");
  sub->add_option("--guard", o->guard, "Maximum edge count");
  sub->add_flag("--json", o->json, "JSON output");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_enum(*o); }); });
}

}  // namespace memlearn::cli
