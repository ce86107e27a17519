#pragma once

#include <vector>

#include "memlearn/rational.hpp"

namespace memlearn {

// maximize c.y  subject to  A y <= b,  y >= 0
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> solution;  // valid when Optimal
};

// Dense two-phase tableau simplex over exact rationals. Bland's rule keeps it
// from cycling on degenerate pivots. Meant for small instances only.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace memlearn
