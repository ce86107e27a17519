#include <algorithm>
#include <set>

#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/generators.hpp"
#include "memlearn/lattice.hpp"
#include "memlearn/table_family.hpp"
#include "oracles.hpp"

using namespace memlearn;

namespace {

std::shared_ptr<const TableFamily> ray22() { return std::make_shared<TableFamily>(make_ray_family(2, 2)); }

std::vector<PredicateSet> sorted_sets(const HasseDiagram& h) {
  std::vector<PredicateSet> out;
  for (const auto& n : h.nodes) out.push_back(n.set);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<PredicateSet, PredicateSet>> edge_sets(const HasseDiagram& h) {
  std::vector<std::pair<PredicateSet, PredicateSet>> out;
  for (auto [p, c] : h.edges) out.emplace_back(h.nodes[p].set, h.nodes[c].set);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<PredicateSet, PredicateSet>> edge_sets(const oracle::BruteLattice& b) {
  std::vector<std::pair<PredicateSet, PredicateSet>> out;
  for (auto [p, c] : b.covers) out.emplace_back(b.reps[p], b.reps[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("ray 2x2 critical points") {
  auto fam = ray22();
  auto cps = build_critical_points(*fam);
  // Signatures 1010, 1011, 1110, 1111 by direct evaluation: four cells.
  CHECK(cps.size() == 4);
  std::set<std::vector<bool>> sigs(cps.signatures.begin(), cps.signatures.end());
  CHECK(sigs.size() == 4);
}

TEST_CASE("ray 2x2 hasse diagram") {
  auto lat = make_lattice(ray22(), Mode::Or);
  auto h = build_hasse(*lat);
  REQUIRE(h.nodes.size() == 5);
  CHECK(h.nodes[0].set == PredicateSet{0, 1, 2, 3});
  CHECK(sorted_sets(h) == std::vector<PredicateSet>{{}, {0, 1, 2, 3}, {1}, {1, 3}, {3}});
  CHECK(h.edges.size() == 5);
  CHECK(h.max_out_degree() == 2);
  auto dot = to_dot(h, lat->family());
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("representative operations on ray 2x2") {
  auto lat = make_lattice(ray22(), Mode::Or);
  CHECK(closure(*lat, PredicateSet{0}).set == PredicateSet{0, 1, 2, 3});
  CHECK(closure(*lat, PredicateSet{1}).set == PredicateSet{1});
  CHECK(is_representative(*lat, PredicateSet{1, 3}));
  CHECK_FALSE(is_representative(*lat, PredicateSet{0}));
  Representative a{PredicateSet{1}, Mode::Or}, b{PredicateSet{3}, Mode::Or};
  CHECK(lca(*lat, a, b).set == PredicateSet{1, 3});
  CHECK(gcd_rep(*lat, a, b).set == PredicateSet{});
  auto top = closure(*lat, PredicateSet::full(4));
  auto des = all_imm_de(*lat, top);
  REQUIRE(des.size() == 1);
  CHECK(des[0].set == PredicateSet{1, 3});
  auto w = find_witness(*lat, top, des[0]);
  CHECK(lat->holds(top.set, w));
  CHECK_FALSE(lat->holds(des[0].set, w));
}

TEST_CASE("z set keeps members vanishing on the points") {
  auto lat = make_lattice(ray22(), Mode::Or);
  Representative g{PredicateSet{1, 3}, Mode::Or};
  std::vector<Assignment> pts{Assignment::from_ints({1, 2})};
  // At (1,2) f12 is 0 and f22 is 1.
  CHECK(z_set(*lat, g, pts) == PredicateSet{1});
}

TEST_CASE("hasse cap is enforced") {
  auto lat = make_lattice(ray22(), Mode::Or);
  CHECK_THROWS_AS(build_hasse(*lat, 3), GuardExceeded);
}

TEST_CASE("single predicate lattice has two nodes") {
  auto fam = std::make_shared<TableFamily>(
      std::vector<Assignment>{Assignment::from_ints({1}), Assignment::from_ints({2})},
      std::vector<std::vector<bool>>{{false, true}});
  for (Mode mode : {Mode::Or, Mode::And}) {
    auto h = build_hasse(*make_lattice(fam, mode));
    CHECK(h.nodes.size() == 2);
    CHECK(h.edges.size() == 1);
  }
}

TEST_CASE("probe lattice agrees with brute force on random tables") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t nf = 1 + trial % 5;
    const std::size_t nx = 1 + (trial * 7) % 8;
    auto fam = random_table_family(rng, nf, nx);
    for (Mode mode : {Mode::Or, Mode::And}) {
      auto lat = make_lattice(fam, mode);
      auto h = build_hasse(*lat);
      auto brute = oracle::brute_lattice(*fam, fam->domain(), mode);
      CHECK(sorted_sets(h) == brute.reps);
      CHECK(edge_sets(h) == edge_sets(brute));
      for (auto [p, c] : h.edges) {
        auto w = lat->witness(h.nodes[p].set, h.nodes[c].set);
        if (mode == Mode::Or) {
          CHECK(lat->holds(h.nodes[p].set, w));
          CHECK_FALSE(lat->holds(h.nodes[c].set, w));
        } else {
          CHECK(lat->holds(h.nodes[c].set, w));
          CHECK_FALSE(lat->holds(h.nodes[p].set, w));
        }
      }
    }
  }
}

TEST_CASE("climb stays below the parent") {
  Rng rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    auto fam = random_table_family(rng, 4, 6);
    auto lat = make_lattice(fam, Mode::Or);
    auto h = build_hasse(*lat);
    for (auto [p, c] : h.edges) {
      const auto& g = h.nodes[p].set;
      auto grown = lat->climb(g, h.nodes[c].set);
      CHECK(grown.is_subset_of(g));
      CHECK_FALSE(lat->equal(grown, g));
      CHECK(lat->equal(grown, h.nodes[c].set));
    }
  }
}
