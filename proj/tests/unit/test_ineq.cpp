#include <algorithm>

#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/generators.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/learner.hpp"
#include "oracles.hpp"

using namespace memlearn;

namespace {

std::shared_ptr<const IneqFamily> six_pairs() {
  return std::make_shared<IneqFamily>(4, std::vector<VarPair>{{1, 2}, {1, 4}, {1, 3}, {3, 4}, {2, 4}, {3, 2}});
}

std::vector<PredicateSet> all_subsets(std::size_t m) {
  std::vector<PredicateSet> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<PredicateIndex> members;
    for (PredicateIndex f = 0; f < m; ++f) {
      if (mask & (1U << f)) members.push_back(f);
    }
    out.push_back(PredicateSet::from_unsorted(members));
  }
  return out;
}

std::vector<PredicateSet> node_sets(const HasseDiagram& h) {
  std::vector<PredicateSet> out;
  for (const auto& n : h.nodes) out.push_back(n.set);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("family validation and naming") {
  CHECK_THROWS_AS(IneqFamily(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(IneqFamily(3, {{1, 2}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(IneqFamily(3, {{1, 4}}), ValidationError);
  CHECK(IneqFamily(3, {{1, 2}}).predicate_name(0) == "x1>x2");
  CHECK(IneqFamily(3, {{1, 2}}, false).predicate_name(0) == "x1>=x2");
  auto f = six_pairs();
  CHECK(f->acyclic());
  CHECK(f->index_of({3, 2}) == std::optional<PredicateIndex>{5});
  CHECK_FALSE(f->index_of({2, 3}).has_value());
}

TEST_CASE("reachability") {
  auto r = ReachabilityMatrix::of(3, {{1, 2}, {2, 3}});
  CHECK(r.reaches(1, 3));
  CHECK_FALSE(r.reaches(3, 1));
  CHECK_FALSE(r.reaches(1, 1));
  CHECK_FALSE(r.has_cycle());
  CHECK(ReachabilityMatrix::of(2, {{1, 2}, {2, 1}}).has_cycle());
}

TEST_CASE("toposort assignment on the six-pair family") {
  auto f = six_pairs();
  // Longest paths to the sink 4: 4 -> 1, 2 -> 2, 3 -> 3, 1 -> 4.
  CHECK(toposort_assignment(*f, PredicateSet::full(6)) == Assignment::from_ints({4, 2, 3, 1}));
  CHECK(f->evaluate_set(PredicateSet::full(6), Assignment::from_ints({4, 2, 3, 1}), Mode::And));
}

TEST_CASE("chain witnesses merge the dropped pair") {
  auto f = std::make_shared<IneqFamily>(3, std::vector<VarPair>{{1, 2}, {2, 3}});
  const PredicateSet g{0, 1};
  auto des = ineq_imm_descendants(*f, g);
  REQUIRE(des == std::vector<PredicateSet>{{1}, {0}});
  // Dropping 1>2 layers {1,2} > 3; dropping 2>3 layers 1 > {2,3}.
  CHECK(ineq_witness(*f, g, PredicateSet{1}) == Assignment::from_ints({2, 2, 1}));
  CHECK(ineq_witness(*f, g, PredicateSet{0}) == Assignment::from_ints({2, 1, 1}));
}

TEST_CASE("implied pairs are not descendants") {
  // 1>3 follows from 1>2>3, so removing it changes nothing.
  auto f = std::make_shared<IneqFamily>(3, std::vector<VarPair>{{1, 2}, {2, 3}, {1, 3}});
  CHECK(ineq_representative(*f, PredicateSet{0, 1}) == PredicateSet{0, 1, 2});
  CHECK(ineq_imm_descendants(*f, PredicateSet{0, 1, 2}).size() == 2);
}

TEST_CASE("small cycles enumerate by hand") {
  // A 2-cycle drops either edge; a 3-cycle drops any one of its three.
  CHECK(enumerate_max_acyclic(2, {{1, 2}, {2, 1}}) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(enumerate_max_acyclic(3, {{1, 2}, {2, 3}, {3, 1}}) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(enumerate_max_acyclic(3, {{1, 2}, {2, 3}}) == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK_THROWS_AS(enumerate_max_acyclic(3, {{1, 2}, {2, 3}, {3, 1}}, 2), GuardExceeded);
}

TEST_CASE("enumeration matches brute force on random digraphs") {
  Rng rng(301);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto edges = random_digraph(rng, n, 0.5);
    if (edges.size() > 12) edges.resize(12);
    CHECK(enumerate_max_acyclic(n, edges) == oracle::brute_max_acyclic(n, edges));
  }
}

TEST_CASE("matrix equality matches evaluation on the grid") {
  Rng rng(302);
  for (int trial = 0; trial < 12; ++trial) {
    auto f = random_acyclic_ineq(rng, 2 + trial % 3, 0.7);
    auto subsets = all_subsets(f->size());
    for (const auto& a : subsets) {
      for (const auto& b : subsets) CHECK(ineq_equal(*f, a, b) == oracle::brute_ineq_equal(*f, a, b));
    }
  }
  // A strict cyclic family: every cyclic set is the zero function.
  IneqFamily cyc(3, {{1, 2}, {2, 3}, {3, 1}, {2, 1}});
  for (const auto& a : all_subsets(4)) {
    for (const auto& b : all_subsets(4)) CHECK(ineq_equal(cyc, a, b) == oracle::brute_ineq_equal(cyc, a, b));
  }
}

TEST_CASE("six-pair family lattice matches the table rendering") {
  auto f = six_pairs();
  auto lat = make_lattice(f, Mode::And);
  auto h = build_hasse(*lat);
  auto brute = oracle::brute_lattice(*oracle::render_as_table(*f), oracle::grid(4, 4), Mode::And);
  CHECK(node_sets(h) == brute.reps);
  CHECK(h.edges.size() == brute.covers.size());
}

TEST_CASE("constructive lattice matches brute force on small families") {
  Rng rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const bool strict = trial % 4 != 3;
    std::vector<VarPair> edges = trial % 2 ? random_digraph(rng, n, 0.5) : random_acyclic_ineq(rng, n, 0.6)->pairs();
    if (edges.size() > 8) edges.resize(8);
    auto f = std::make_shared<IneqFamily>(n, edges, strict);
    auto lat = make_lattice(f, Mode::And);
    auto h = build_hasse(*lat);
    auto table = oracle::render_as_table(*f);
    auto brute = oracle::brute_lattice(*table, table->domain(), Mode::And);
    CHECK(node_sets(h) == brute.reps);
    CHECK(h.edges.size() == brute.covers.size());
    for (auto [p, c] : h.edges) {
      auto w = lat->witness(h.nodes[p].set, h.nodes[c].set);
      CHECK(f->evaluate_set(h.nodes[c].set, w, Mode::And));
      CHECK_FALSE(f->evaluate_set(h.nodes[p].set, w, Mode::And));
    }
  }
}

TEST_CASE("top of a cyclic strict family descends to the maximal acyclic subgraphs") {
  auto f = std::make_shared<IneqFamily>(3, std::vector<VarPair>{{1, 2}, {2, 3}, {3, 1}, {1, 3}});
  IneqLattice lat(f);
  auto top = lat.top();
  CHECK(top == PredicateSet::full(4));
  auto des = lat.immediate_descendants(top);
  std::sort(des.begin(), des.end());
  CHECK(des == enumerate_max_acyclic(*f));
}

TEST_CASE("six-pair family with the constant-true target takes six queries") {
  auto f = six_pairs();
  SimulatedTeacher teacher(f, PredicateSet{}, Mode::And);
  auto run = learn_ineq(f, teacher);
  CHECK(run.queries == 6);
  CHECK(run.result.set == PredicateSet{});
}

TEST_CASE("acyclic learning stays within the pair count") {
  Rng rng(304);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_acyclic_ineq(rng, 2 + trial % 4, 0.5);
    auto h = build_hasse(*make_lattice(f, Mode::And));
    for (const auto& node : h.nodes) {
      SimulatedTeacher teacher(f, node.set, Mode::And);
      auto run = learn_ineq(f, teacher);
      CHECK(run.result.set == node.set);
      CHECK(run.queries <= f->size());
    }
  }
}
