#include "memlearn/generators.hpp"

#include <algorithm>
#include <numeric>

namespace memlearn {

std::shared_ptr<const TableFamily> random_table_family(Rng& rng, std::size_t family_size, std::size_t domain_size) {
  std::vector<Assignment> domain;
  for (std::size_t p = 1; p <= domain_size; ++p) domain.push_back(Assignment::from_ints({static_cast<long long>(p)}));
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<bool>> rows(family_size, std::vector<bool>(domain_size));
  for (auto& row : rows) {
    for (std::size_t p = 0; p < domain_size; ++p) row[p] = coin(rng);
  }
  return std::make_shared<TableFamily>(std::move(domain), std::move(rows));
}

std::shared_ptr<const IneqFamily> random_acyclic_ineq(Rng& rng, std::size_t n, double density, bool strict) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<VarPair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (keep(rng)) pairs.push_back({order[a], order[b]});
    }
  }
  if (pairs.empty() && n >= 2) pairs.push_back({order[0], order[1]});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return std::make_shared<IneqFamily>(n, std::move(pairs), strict);
}

std::vector<VarPair> random_digraph(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<VarPair> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j && keep(rng)) edges.push_back({i, j});
    }
  }
  if (edges.empty() && n >= 2) edges.push_back({1, 2});
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

std::shared_ptr<const HalfspaceFamily> random_halfspace_family(Rng& rng, std::size_t dim, std::size_t family_size,
                                                               int range) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Halfspace> hs;
  while (hs.size() < family_size) {
    Halfspace h;
    bool nonzero = false;
    for (std::size_t i = 0; i < dim; ++i) {
      const int c = coef(rng);
      nonzero = nonzero || c != 0;
      h.coeffs.emplace_back(c);
    }
    if (!nonzero) continue;
    h.threshold = Rational(coef(rng));
    hs.push_back(std::move(h));
  }
  return std::make_shared<HalfspaceFamily>(dim, std::move(hs));
}

}  // namespace memlearn
