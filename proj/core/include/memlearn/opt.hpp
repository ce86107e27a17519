#pragma once

#include <cstddef>

#include "memlearn/lattice.hpp"

namespace memlearn {

struct OptCaps {
  std::size_t max_representatives = 8;
  std::size_t max_queries = 8;
};

// Exact minimum worst-case number of membership queries that identifies any
// representative of the lattice, by minimax over adaptive strategies. Query
// points come from the lattice's query pool, with points that answer alike on
// every representative merged. Throws GuardExceeded past the caps (counted
// after merging). Meant as a test oracle on tiny lattices.
std::size_t opt_bruteforce(const Lattice& lattice, const OptCaps& caps = {});

}  // namespace memlearn
