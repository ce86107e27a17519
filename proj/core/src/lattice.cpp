#include "memlearn/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "memlearn/errors.hpp"
#include "memlearn/halfspace.hpp"
#include "memlearn/ineq.hpp"

namespace memlearn {

// --- Critical points -----------------------------------------------------------

namespace {

std::vector<bool> signature_of(const PredicateFamily& family, const Assignment& a) {
  std::vector<bool> sig(family.size());
  for (std::size_t f = 0; f < family.size(); ++f) sig[f] = family.evaluate(static_cast<PredicateIndex>(f), a);
  return sig;
}

CriticalPointSet split_samples(const PredicateFamily& family, const std::vector<Assignment>& samples) {
  if (samples.empty()) throw ValidationError("family domain is empty");
  // Cells over f_1..f_i as ascending sample-index lists.
  std::vector<std::vector<std::size_t>> cells(1);
  cells[0].resize(samples.size());
  std::iota(cells[0].begin(), cells[0].end(), std::size_t{0});

  for (std::size_t f = 0; f < family.size(); ++f) {
    std::vector<std::vector<std::size_t>> next;
    next.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      std::vector<std::size_t> pos, neg;
      for (auto p : cell) {
        (family.evaluate(static_cast<PredicateIndex>(f), samples[p]) ? pos : neg).push_back(p);
      }
      if (!neg.empty()) next.push_back(std::move(neg));
      if (!pos.empty()) next.push_back(std::move(pos));
    }
    cells = std::move(next);
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  CriticalPointSet out;
  for (const auto& cell : cells) {
    out.points.push_back(samples[cell.front()]);
    out.signatures.push_back(signature_of(family, samples[cell.front()]));
  }
  return out;
}

CriticalPointSet split_feasible(const PredicateFamily& family) {
  struct Cell {
    SignCondition sc;
    Assignment point;
  };
  auto origin = family.find_point(SignCondition{});
  if (!origin) throw InternalError("family domain reported empty");
  std::vector<Cell> cells{Cell{SignCondition{}, *origin}};

  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto f = static_cast<PredicateIndex>(i);
    std::vector<Cell> next;
    next.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      const bool here = family.evaluate(f, cell.point);
      SignCondition other = cell.sc;
      (here ? other.negatives : other.positives).insert(f);
      std::optional<Assignment> other_point = family.find_point(other);

      SignCondition same = cell.sc;
      (here ? same.positives : same.negatives).insert(f);
      Cell kept{std::move(same), cell.point};
      std::optional<Cell> split;
      if (other_point) split = Cell{std::move(other), std::move(*other_point)};

      // Negative half first, then positive.
      if (here) {
        if (split) next.push_back(std::move(*split));
        next.push_back(std::move(kept));
      } else {
        next.push_back(std::move(kept));
        if (split) next.push_back(std::move(*split));
      }
    }
    cells = std::move(next);
  }

  CriticalPointSet out;
  for (auto& cell : cells) {
    out.signatures.push_back(signature_of(family, cell.point));
    out.points.push_back(std::move(cell.point));
  }
  return out;
}

}  // namespace

CriticalPointSet build_critical_points(const PredicateFamily& family) {
  if (auto samples = family.cell_samples()) return split_samples(family, *samples);
  return split_feasible(family);
}

// --- Lattice base ----------------------------------------------------------------

Lattice::Lattice(std::shared_ptr<const PredicateFamily> family, Mode mode)
    : family_(std::move(family)), mode_(mode) {
  if (!family_) throw ValidationError("lattice needs a family");
}

bool Lattice::equal(const PredicateSet& s1, const PredicateSet& s2) const {
  return family_->set_equal(s1, s2, mode_);
}

PredicateSet Lattice::closure(const PredicateSet& s) const {
  family_->check_set(s);
  PredicateSet out = s;
  for (std::size_t i = 0; i < family_->size(); ++i) {
    const auto f = static_cast<PredicateIndex>(i);
    if (s.contains(f)) continue;
    PredicateSet extended = s;
    extended.insert(f);
    if (equal(extended, s)) out.insert(f);
  }
  return out;
}

PredicateSet Lattice::climb(const PredicateSet& g, const PredicateSet& seed) const {
  if (!seed.is_subset_of(g)) throw ValidationError("climb seed is not contained in the representative");
  if (equal(seed, g)) throw ValidationError("climb seed already has the representative's function");
  // A rejected f stays rejected as the set grows, so one ascending pass
  // reaches the fixpoint of the repeated scan.
  PredicateSet s = seed;
  for (auto f : g.minus(seed)) {
    PredicateSet extended = s;
    extended.insert(f);
    if (!equal(extended, g)) s = std::move(extended);
  }
  return s;
}

// --- ProbeLattice -----------------------------------------------------------------

ProbeLattice::ProbeLattice(std::shared_ptr<const PredicateFamily> family, Mode mode, CriticalPointSet probes)
    : Lattice(std::move(family), mode), probes_(std::move(probes)) {
  const std::size_t n = probes_.size();
  const bool flip = mode == Mode::And;
  literal_bits_.assign(this->family().size(), Bits(n));
  for (std::size_t p = 0; p < n; ++p) {
    if (probes_.signatures[p].size() != this->family().size()) {
      throw ValidationError("critical point signature length does not match family size");
    }
    for (std::size_t f = 0; f < this->family().size(); ++f) {
      if (probes_.signatures[p][f] != flip) literal_bits_[f].set(p);
    }
  }
}

ProbeLattice::ProbeLattice(std::shared_ptr<const PredicateFamily> family, Mode mode)
    : ProbeLattice(family, mode, build_critical_points(*family)) {}

ProbeLattice::Bits ProbeLattice::join(const PredicateSet& s) const {
  family().check_set(s);
  Bits out(probes_.size());
  for (auto f : s) out |= literal_bits_[f];
  return out;
}

bool ProbeLattice::equal(const PredicateSet& s1, const PredicateSet& s2) const { return join(s1) == join(s2); }

PredicateSet ProbeLattice::closure(const PredicateSet& s) const {
  const Bits j = join(s);
  PredicateSet out = s;
  for (std::size_t f = 0; f < literal_bits_.size(); ++f) {
    if (literal_bits_[f].is_subset_of(j)) out.insert(static_cast<PredicateIndex>(f));
  }
  return out;
}

PredicateSet ProbeLattice::climb(const PredicateSet& g, const PredicateSet& seed) const {
  if (!seed.is_subset_of(g)) throw ValidationError("climb seed is not contained in the representative");
  const Bits target = join(g);
  Bits current = join(seed);
  if (current == target) throw ValidationError("climb seed already has the representative's function");
  PredicateSet s = seed;
  for (auto f : g.minus(seed)) {
    Bits extended = current | literal_bits_[f];
    if (extended != target) {
      s.insert(f);
      current = std::move(extended);
    }
  }
  return s;
}

std::optional<std::size_t> ProbeLattice::completeness_counterexample(const PredicateSet& g,
                                                                     const std::vector<PredicateSet>& found) const {
  const Bits target = join(g);
  Bits rhs(probes_.size());
  for (const auto& d : found) {
    Bits meet(probes_.size());
    meet.set();
    for (auto f : g.minus(d)) meet &= literal_bits_[f];
    rhs |= meet;
  }
  Bits diff = target - rhs;
  auto p = diff.find_first();
  if (p == Bits::npos) return std::nullopt;
  return p;
}

std::vector<PredicateSet> ProbeLattice::immediate_descendants(const PredicateSet& g) const {
  std::vector<PredicateSet> found;
  if (join(g).none()) return found;
  found.push_back(climb(g, PredicateSet{}));
  while (auto p = completeness_counterexample(g, found)) {
    PredicateSet z;
    for (auto f : g) {
      if (!literal_bits_[f].test(*p)) z.insert(f);
    }
    PredicateSet next = climb(g, closure(z));
    for (const auto& d : found) {
      if (next.is_subset_of(d)) throw InternalError("descendant search climbed to an already found descendant");
    }
    found.push_back(std::move(next));
  }
  return found;
}

Assignment ProbeLattice::witness(const PredicateSet& g, const PredicateSet& child) const {
  if (!child.is_proper_subset_of(g)) throw ValidationError("witness needs a child strictly inside the parent");
  Bits diff = join(g) - join(child);
  auto p = diff.find_first();
  if (p == Bits::npos) throw InternalError("no witness between " + to_string(g) + " and " + to_string(child));
  for (auto f : g.minus(child)) {
    if (!literal_bits_[f].test(p)) {
      throw InternalError("witness contradicts the immediate-descendant characterization");
    }
  }
  return probes_.points[p];
}

// --- Factory ------------------------------------------------------------------------

std::shared_ptr<const Lattice> make_lattice(std::shared_ptr<const PredicateFamily> family, Mode mode) {
  if (!family) throw ValidationError("make_lattice needs a family");
  switch (family->kind()) {
    case FamilyKind::VarIneq: {
      auto ineq = std::dynamic_pointer_cast<const IneqFamily>(family);
      if (mode == Mode::And) return std::make_shared<IneqLattice>(ineq);
      return std::make_shared<ProbeLattice>(family, mode);
    }
    case FamilyKind::Halfspace: {
      auto hs = std::dynamic_pointer_cast<const HalfspaceFamily>(family);
      return std::make_shared<ProbeLattice>(family, mode, hs->critical_points());
    }
    case FamilyKind::Table:
      return std::make_shared<ProbeLattice>(family, mode);
  }
  throw InternalError("unknown family kind");
}

// --- Free operations --------------------------------------------------------------

Representative closure(const Lattice& lattice, const PredicateSet& s) {
  return {lattice.closure(s), lattice.mode()};
}

bool is_representative(const Lattice& lattice, const PredicateSet& s) { return lattice.closure(s) == s; }

Representative lca(const Lattice& lattice, const Representative& g1, const Representative& g2) {
  return closure(lattice, g1.set.union_with(g2.set));
}

Representative gcd_rep(const Lattice& lattice, const Representative& g1, const Representative& g2) {
  return {g1.set.intersect(g2.set), lattice.mode()};
}

Representative get_imm_de(const Lattice& lattice, const Representative& g, const PredicateSet& seed) {
  return {lattice.climb(g.set, seed), lattice.mode()};
}

PredicateSet z_set(const Lattice& lattice, const Representative& g, std::span<const Assignment> pts) {
  if (pts.empty()) throw ValidationError("z_set needs at least one point");
  const auto& family = lattice.family();
  family.check_set(g.set);
  PredicateSet out = g.set;
  for (const auto& x : pts) {
    bool g_literal = false;
    PredicateSet keep;
    for (auto f : out) {
      if (!lattice.literal(f, x)) keep.insert(f);
    }
    for (auto f : g.set) g_literal = g_literal || lattice.literal(f, x);
    if (!g_literal) throw ValidationError("z_set point " + to_string(x) + " is not in the support of the representative");
    out = std::move(keep);
  }
  return out;
}

std::vector<Representative> all_imm_de(const Lattice& lattice, const Representative& g) {
  std::vector<Representative> out;
  for (auto& d : lattice.immediate_descendants(g.set)) out.push_back({std::move(d), lattice.mode()});
  return out;
}

Assignment find_witness(const Lattice& lattice, const Representative& g, const Representative& child) {
  return lattice.witness(g.set, child.set);
}

// --- Hasse diagram ----------------------------------------------------------------

std::optional<std::size_t> HasseDiagram::index_of(const PredicateSet& s) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].set == s) return i;
  }
  return std::nullopt;
}

std::size_t HasseDiagram::max_out_degree() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& e : edges) ++deg[e.first];
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

HasseDiagram build_hasse(const Lattice& lattice, std::size_t cap) {
  HasseDiagram h;
  std::map<PredicateSet, std::size_t> index;
  auto add = [&](PredicateSet s) -> std::size_t {
    auto [it, inserted] = index.emplace(s, h.nodes.size());
    if (inserted) {
      if (h.nodes.size() >= cap) {
        throw GuardExceeded("Hasse diagram exceeds the cap of " + std::to_string(cap) + " representatives");
      }
      h.nodes.push_back({std::move(s), lattice.mode()});
    }
    return it->second;
  };
  add(lattice.top());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const PredicateSet parent = h.nodes[i].set;
    for (auto& child : lattice.immediate_descendants(parent)) {
      const std::size_t c = add(std::move(child));
      h.edges.emplace_back(i, c);
    }
  }
  return h;
}

std::string to_dot(const HasseDiagram& diagram, const PredicateFamily& family) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const auto& s = diagram.nodes[i].set;
    std::string names;
    for (auto f : s) {
      if (!names.empty()) names += diagram.nodes[i].mode == Mode::Or ? " | " : " & ";
      names += family.predicate_name(f);
    }
    if (names.empty()) names = diagram.nodes[i].mode == Mode::Or ? "0" : "1";
    os << "  n" << i << " [label=\"" << to_string(s) << "\", tooltip=\"" << names << "\"];\n";
  }
  for (const auto& [p, c] : diagram.edges) os << "  n" << p << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace memlearn
