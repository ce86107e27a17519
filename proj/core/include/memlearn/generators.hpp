#pragma once

#include <memory>
#include <random>

#include "memlearn/halfspace.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/table_family.hpp"

namespace memlearn {

// Seeded random instances for benchmarks and property tests. All draws go
// through the given engine, so a seed fixes the instance.
using Rng = std::mt19937_64;

// |F| predicates over the points 1..|X| in one dimension, each row uniform.
std::shared_ptr<const TableFamily> random_table_family(Rng& rng, std::size_t family_size, std::size_t domain_size);

// Acyclic pairs: a random vertex order, then each forward pair kept with
// probability density. At least one pair is always present.
std::shared_ptr<const IneqFamily> random_acyclic_ineq(Rng& rng, std::size_t n, double density, bool strict = true);

// Any simple digraph: each ordered pair (i, j), i != j, kept with
// probability density; at least one edge.
std::vector<VarPair> random_digraph(Rng& rng, std::size_t n, double density);

// Halfspaces with small integer coefficients in [-range, range], no
// all-zero coefficient rows.
std::shared_ptr<const HalfspaceFamily> random_halfspace_family(Rng& rng, std::size_t dim, std::size_t family_size,
                                                               int range = 3);

}  // namespace memlearn
