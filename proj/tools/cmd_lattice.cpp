#include <fstream>
#include <iostream>

#include "common.hpp"
#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"

namespace memlearn::cli {

namespace {

struct LatticeOptions {
  std::string family;
  std::string mode = "or";
  std::string out;
  std::size_t cap = kDefaultHasseCap;
  bool json = false;
};

int run_lattice(const LatticeOptions& o) {
  auto family = load_family(o.family);
  const Mode mode = parse_mode(o.mode);
  auto lattice = make_lattice(family, mode);
  const auto diagram = build_hasse(*lattice, o.cap);

  std::string text;
  if (o.json) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : diagram.nodes) nodes.push_back(representative_json(n, *family));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [p, c] : diagram.edges) edges.push_back({p, c});
    text = nlohmann::json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)},
                          {"max_out_degree", diagram.max_out_degree()}}
               .dump(2) +
           "\n";
  } else {
    text = to_dot(diagram, *family);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw ValidationError("cannot write " + o.out);
    f << text;
    std::cerr << diagram.nodes.size() << " representatives, " << diagram.edges.size() << " edges\n";
  }
  return kOk;
}

}  // namespace

void add_lattice(CLI::App& app) {
  auto o = std::make_shared<LatticeOptions>();
  auto* sub = app.add_subcommand("lattice", "Build the Hasse diagram of representatives (DOT or JSON)");
  sub->add_option("--family", o->family, "Family file (JSON)")->required()->check(CLI::ExistingFile);
  sub->add_option("--mode", o->mode, "or | and")->check(CLI::IsMember({"or", "and"}));
  sub->add_option("--out", o->out, "Output file (default stdout)");
  sub->add_option("--cap", o->cap, "Maximum number of representatives");
  sub->add_flag("--json", o->json, "JSON instead of DOT");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_lattice(*o); }); });
}

}  // namespace memlearn::cli
