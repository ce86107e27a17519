#include "doctest.h"
#include "memlearn/errors.hpp"
#include "memlearn/generators.hpp"
#include "memlearn/learner.hpp"
#include "memlearn/opt.hpp"
#include "memlearn/table_family.hpp"

using namespace memlearn;

TEST_CASE("single predicate needs one query") {
  auto fam = std::make_shared<TableFamily>(
      std::vector<Assignment>{Assignment::from_ints({1}), Assignment::from_ints({2})},
      std::vector<std::vector<bool>>{{false, true}});
  CHECK(opt_bruteforce(*make_lattice(fam, Mode::Or)) == 1);
}

TEST_CASE("threshold chain of three functions needs two queries") {
  // [x >= 2] and [x >= 3] over 1..3: a chain of three functions, and any
  // single point splits it into at most two groups.
  auto fam = std::make_shared<TableFamily>(
      std::vector<Assignment>{Assignment::from_ints({1}), Assignment::from_ints({2}), Assignment::from_ints({3})},
      std::vector<std::vector<bool>>{{false, true, true}, {false, false, true}});
  CHECK(opt_bruteforce(*make_lattice(fam, Mode::Or)) == 2);
}

TEST_CASE("ray 2x2 needs three queries") {
  // Five functions over four points. Two queries could separate at most four,
  // and three suffice: (2,1) splits {top, f12 or f22, f12} from {f22, 0}.
  auto fam = std::make_shared<TableFamily>(make_ray_family(2, 2));
  CHECK(opt_bruteforce(*make_lattice(fam, Mode::Or)) == 3);
}

TEST_CASE("caps are enforced") {
  auto fam = std::make_shared<TableFamily>(make_ray_family(2, 2));
  CHECK_THROWS_AS(opt_bruteforce(*make_lattice(fam, Mode::Or), OptCaps{4, 8}), GuardExceeded);
}

TEST_CASE("opt sits between the information bound and the learner") {
  Rng rng(501);
  int checked = 0;
  for (int trial = 0; trial < 80 && checked < 25; ++trial) {
    auto fam = random_table_family(rng, 3, 4);
    auto lat = make_lattice(fam, Mode::Or);
    auto h = build_hasse(*lat);
    if (h.nodes.size() > 6) continue;
    ++checked;
    const auto v = opt_bruteforce(*lat);
    CHECK(v >= ceil_log2(h.nodes.size()));
    CHECK(v >= h.max_out_degree());
    for (const auto& node : h.nodes) {
      SimulatedTeacher teacher(fam, node.set, Mode::Or);
      CHECK(learn(lat, teacher).queries <= fam->size() * v);
    }
  }
  CHECK(checked >= 20);
}
