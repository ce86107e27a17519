#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/table_family.hpp"
#include "oracles.hpp"

using namespace memlearn;

TEST_CASE("ray family layout") {
  auto ray = make_ray_family(2, 2);
  CHECK(ray.size() == 4);
  CHECK(ray.domain_dim() == 2);
  CHECK(ray.domain().size() == 4);
  CHECK(ray.predicate_name(0) == "f11");
  CHECK(ray.predicate_name(3) == "f22");
  // Rows over (1,1),(1,2),(2,1),(2,2), worked by hand.
  CHECK(ray.rows()[0] == std::vector<bool>{1, 1, 1, 1});
  CHECK(ray.rows()[1] == std::vector<bool>{0, 0, 1, 1});
  CHECK(ray.rows()[2] == std::vector<bool>{1, 1, 1, 1});
  CHECK(ray.rows()[3] == std::vector<bool>{0, 1, 0, 1});
}

TEST_CASE("locate finds domain points only") {
  auto ray = make_ray_family(2, 2);
  CHECK(ray.locate(Assignment::from_ints({2, 1})) == std::optional<std::size_t>{2});
  CHECK_FALSE(ray.locate(Assignment::from_ints({3, 1})).has_value());
}

TEST_CASE("table equality over the full domain") {
  auto ray = make_ray_family(2, 2);
  // f11 and f21 are both constant 1.
  CHECK(ray.set_equal(PredicateSet{0}, PredicateSet{2}, Mode::Or));
  CHECK(ray.set_equal(PredicateSet{0}, PredicateSet{0, 1, 2, 3}, Mode::Or));
  CHECK_FALSE(ray.set_equal(PredicateSet{1}, PredicateSet{3}, Mode::Or));
  CHECK(ray.set_equal(PredicateSet{}, PredicateSet{0}, Mode::And));
  CHECK_FALSE(ray.set_equal(PredicateSet{}, PredicateSet{1}, Mode::And));
}

TEST_CASE("construction validation") {
  std::vector<Assignment> dom{Assignment::from_ints({1}), Assignment::from_ints({2})};
  CHECK_THROWS_AS(TableFamily(dom, {{true}}), ValidationError);
  CHECK_THROWS_AS(TableFamily({Assignment::from_ints({1}), Assignment::from_ints({1})}, {{true, false}}),
                  ValidationError);
  CHECK_THROWS_AS(TableFamily({Assignment::from_ints({1}), Assignment::from_ints({1, 2})}, {{true, false}}),
                  ValidationError);
  CHECK_THROWS_AS(TableFamily(dom, {{true, false}}, {"a", "b"}), ValidationError);
}

TEST_CASE("evaluation off the domain is rejected") {
  auto ray = make_ray_family(2, 2);
  CHECK_THROWS_AS(ray.evaluate(0, Assignment::from_ints({5, 5})), ValidationError);
}
