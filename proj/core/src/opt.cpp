#include "memlearn/opt.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>

#include "memlearn/errors.hpp"

namespace memlearn {

namespace {

class Minimax {
 public:
  explicit Minimax(std::vector<std::uint64_t> splits) : splits_(std::move(splits)) {}

  // A query that does not split the state gains nothing and is skipped. Once
  // asked, a query is constant on every later state, so the state alone is
  // a sufficient memo key.
  std::size_t value(std::uint64_t state) {
    if (std::popcount(state) <= 1) return 0;
    if (auto it = memo_.find(state); it != memo_.end()) return it->second;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto yes : splits_) {
      const std::uint64_t one = state & yes;
      const std::uint64_t zero = state & ~yes;
      if (one == 0 || zero == 0) continue;
      best = std::min(best, 1 + std::max(value(one), value(zero)));
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
      throw InternalError("query pool does not separate every representative");
    }
    memo_.emplace(state, best);
    return best;
  }

 private:
  std::vector<std::uint64_t> splits_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

}  // namespace

std::size_t opt_bruteforce(const Lattice& lattice, const OptCaps& caps) {
  const auto diagram = build_hasse(lattice, std::min<std::size_t>(caps.max_representatives, 64) + 1);
  const std::size_t reps = diagram.nodes.size();
  if (reps > caps.max_representatives || reps > 64) {
    throw GuardExceeded("minimax oracle is capped at " + std::to_string(caps.max_representatives) +
                        " representatives, got " + std::to_string(reps));
  }
  std::set<std::uint64_t> distinct;
  const std::uint64_t all = reps == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << reps) - 1;
  for (const auto& q : lattice.query_pool()) {
    std::uint64_t yes = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      if (lattice.holds(diagram.nodes[r].set, q)) yes |= std::uint64_t{1} << r;
    }
    if (yes == 0 || yes == all) continue;
    // A point and its complement pattern split every state identically.
    distinct.insert(std::min(yes, all & ~yes));
  }
  if (distinct.size() > caps.max_queries) {
    throw GuardExceeded("minimax oracle is capped at " + std::to_string(caps.max_queries) + " distinct queries, got " +
                        std::to_string(distinct.size()));
  }
  Minimax m(std::vector<std::uint64_t>(distinct.begin(), distinct.end()));
  return m.value(all);
}

}  // namespace memlearn
