#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/halfspace.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/table_family.hpp"

using namespace memlearn;
using nlohmann::json;

namespace {
std::string data(const char* name) { return std::string(MEMLEARN_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("bundled ray file matches the generator") {
  auto fam = load_family(data("ray22.json"));
  auto ray = make_ray_family(2, 2);
  auto table = std::dynamic_pointer_cast<const TableFamily>(fam);
  REQUIRE(table);
  CHECK(table->rows() == ray.rows());
  CHECK(table->domain() == ray.domain());
  CHECK(load_target(data("ray22_target.json"), *fam) == PredicateSet{1, 3});
}

TEST_CASE("bundled six-pair file") {
  auto fam = load_family(data("six_pairs.json"));
  CHECK(fam->kind() == FamilyKind::VarIneq);
  CHECK(fam->size() == 6);
  CHECK(load_target(data("six_pairs_target_true.json"), *fam) == PredicateSet{});
}

TEST_CASE("halfspace entries accept integers, fractions and decimals") {
  auto fam = family_from_json(json::parse(R"({"kind":"halfspace","d":2,"predicates":[["1","0","3/2"],[0,1,"0.5"]]})"));
  auto hs = std::dynamic_pointer_cast<const HalfspaceFamily>(fam);
  REQUIRE(hs);
  CHECK(hs->halfspace(0).threshold == Rational(3, 2));
  CHECK(hs->halfspace(1).threshold == Rational(1, 2));
}

TEST_CASE("round trips") {
  for (const char* text : {R"({"kind":"table","domain":[[1],[2]],"rows":[[0,1]],"names":["g"]})",
                           R"({"kind":"halfspace","d":1,"predicates":[["2","-1/3"]]})",
                           R"({"kind":"var_ineq","n":3,"pairs":[[1,2],[3,2]],"strict":false})"}) {
    auto fam = family_from_json(json::parse(text));
    auto again = family_from_json(family_to_json(*fam));
    CHECK(family_to_json(*again) == family_to_json(*fam));
  }
  Assignment a{Rational(3, 2), Rational(-2)};
  CHECK(assignment_to_json(a) == json::array({"3/2", "-2"}));
  CHECK(assignment_from_json(assignment_to_json(a)) == a);
  CHECK(assignment_from_json(json::array({1, "0.25"})) == Assignment{Rational(1), Rational(1, 4)});
  CHECK(set_from_json(set_to_json(PredicateSet{0, 4})) == PredicateSet{0, 4});
}

TEST_CASE("malformed files are rejected") {
  for (const char* text : {R"([])", R"({"kind":"cube"})", R"({"kind":"table","domain":[[1]],"rows":[[1]],"extra":1})",
                           R"({"kind":"table","domain":[[1]],"rows":[[2]]})",
                           R"({"kind":"halfspace","d":2,"predicates":[[1,2]]})",
                           R"({"kind":"var_ineq","n":2,"pairs":[[0,1]]})",
                           R"({"kind":"var_ineq","n":2,"pairs":[[1,2]],"strict":"yes"})",
                           R"({"kind":"var_ineq","n":2})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(family_from_json(json::parse(text)), ValidationError);
  }
  CHECK_THROWS_AS(load_family(data("does_not_exist.json")), ValidationError);
}

TEST_CASE("target validation") {
  auto ray = family_from_json(parse_json_file(data("ray22.json")));
  CHECK_THROWS_AS(target_from_json(json::parse(R"({"members":[0,0]})"), *ray), ValidationError);
  CHECK_THROWS_AS(target_from_json(json::parse(R"({"members":[9]})"), *ray), ValidationError);
  CHECK_THROWS_AS(target_from_json(json::parse(R"({"pairs":[[1,2]]})"), *ray), ValidationError);
  CHECK_THROWS_AS(target_from_json(json::parse(R"({})"), *ray), ValidationError);
  auto ineq = load_family(data("six_pairs.json"));
  CHECK(target_from_json(json::parse(R"({"pairs":[[3,2]]})"), *ineq) == PredicateSet{5});
  CHECK_THROWS_AS(target_from_json(json::parse(R"({"pairs":[[2,3]]})"), *ineq), ValidationError);
}
