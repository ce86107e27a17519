#include <random>

#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/generators.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/table_family.hpp"
#include "oracles.hpp"

using namespace memlearn;

TEST_CASE("predicate sets are canonical") {
  auto s = PredicateSet::from_unsorted({3, 1, 2, 1});
  CHECK(s.members() == std::vector<PredicateIndex>{1, 2, 3});
  CHECK(PredicateSet{2, 0} == PredicateSet{0, 2});
  CHECK(to_string(PredicateSet{0, 2, 3}) == "{0, 2, 3}");
  CHECK(PredicateSet{1}.is_proper_subset_of(PredicateSet{1, 2}));
  CHECK_FALSE(PredicateSet{1, 2}.is_proper_subset_of(PredicateSet{1, 2}));
  CHECK(PredicateSet{1, 2}.union_with(PredicateSet{0}) == PredicateSet{0, 1, 2});
  CHECK(PredicateSet{1, 2}.intersect(PredicateSet{2, 3}) == PredicateSet{2});
  CHECK(PredicateSet{1, 2}.minus(PredicateSet{2, 3}) == PredicateSet{1});
  CHECK(PredicateSet::full(3) == PredicateSet{0, 1, 2});
}

TEST_CASE("ray family evaluation") {
  auto ray = make_ray_family(2, 2);
  // f12 is [x1 >= 2]
  CHECK(ray.predicate_name(1) == "f12");
  CHECK_FALSE(ray.evaluate(1, Assignment::from_ints({1, 2})));
  for (const auto& a : ray.domain()) CHECK(ray.evaluate(0, a));
  CHECK_FALSE(ray.evaluate_set(PredicateSet{1, 3}, Assignment::from_ints({1, 1}), Mode::Or));
}

TEST_CASE("empty set semantics") {
  auto ray = make_ray_family(2, 2);
  for (const auto& a : ray.domain()) {
    CHECK_FALSE(ray.evaluate_set(PredicateSet{}, a, Mode::Or));
    CHECK(ray.evaluate_set(PredicateSet{}, a, Mode::And));
  }
}

TEST_CASE("inequality evaluation") {
  IneqFamily fam(3, {{1, 2}, {2, 3}});
  CHECK(fam.evaluate(0, Assignment::from_ints({2, 1, 1})));
  CHECK(fam.evaluate_set(PredicateSet::full(2), Assignment::from_ints({3, 2, 1}), Mode::And));
}

TEST_CASE("argument validation") {
  auto ray = make_ray_family(2, 2);
  CHECK_THROWS_AS(ray.evaluate(4, Assignment::from_ints({1, 1})), ValidationError);
  CHECK_THROWS_AS(ray.evaluate(0, Assignment::from_ints({1})), ValidationError);
  CHECK_THROWS_AS(ray.evaluate_set(PredicateSet{0, 7}, Assignment::from_ints({1, 1}), Mode::Or), ValidationError);
}

TEST_CASE("evaluate_set is the fold of evaluate") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto fam = random_table_family(rng, 5, 6);
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<PredicateIndex> m;
      for (PredicateIndex f = 0; f < 5; ++f) {
        if (mask & (1U << f)) m.push_back(f);
      }
      auto s = PredicateSet::from_unsorted(m);
      for (const auto& a : fam->domain()) {
        bool any = false, all = true;
        for (auto f : s) {
          any = any || fam->evaluate(f, a);
          all = all && fam->evaluate(f, a);
        }
        CHECK(fam->evaluate_set(s, a, Mode::Or) == any);
        CHECK(fam->evaluate_set(s, a, Mode::And) == all);
      }
    }
  }
}

TEST_CASE("set_equal is an equivalence and matches pointwise evaluation on tables") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto fam = random_table_family(rng, 4, 5);
    std::vector<PredicateSet> sets;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      std::vector<PredicateIndex> m;
      for (PredicateIndex f = 0; f < 4; ++f) {
        if (mask & (1U << f)) m.push_back(f);
      }
      sets.push_back(PredicateSet::from_unsorted(m));
    }
    for (Mode mode : {Mode::Or, Mode::And}) {
      for (const auto& a : sets) {
        CHECK(fam->set_equal(a, a, mode));
        for (const auto& b : sets) {
          const bool eq = fam->set_equal(a, b, mode);
          CHECK(eq == fam->set_equal(b, a, mode));
          CHECK(eq == (oracle::truth_vector(*fam, a, fam->domain(), mode) ==
                       oracle::truth_vector(*fam, b, fam->domain(), mode)));
        }
      }
    }
  }
}
