#include "memlearn/ineq.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "memlearn/errors.hpp"
#include "memlearn/learner.hpp"

namespace memlearn {

// --- IneqFamily -------------------------------------------------------------------

IneqFamily::IneqFamily(std::size_t n, std::vector<VarPair> pairs, bool strict)
    : n_(n), pairs_(std::move(pairs)), strict_(strict) {
  if (n_ == 0) throw ValidationError("inequality family needs at least one variable");
  if (n_ > kMaxIneqVariables) {
    throw ValidationError("inequality family supports at most " + std::to_string(kMaxIneqVariables) + " variables");
  }
  std::set<VarPair> seen;
  for (const auto& p : pairs_) {
    if (p.from < 1 || p.from > n_ || p.to < 1 || p.to > n_) {
      throw ValidationError("pair (" + std::to_string(p.from) + "," + std::to_string(p.to) + ") is outside 1.." +
                            std::to_string(n_));
    }
    if (p.from == p.to) throw ValidationError("diagonal pair (" + std::to_string(p.from) + "," + std::to_string(p.to) + ")");
    if (!seen.insert(p).second) {
      throw ValidationError("duplicate pair (" + std::to_string(p.from) + "," + std::to_string(p.to) + ")");
    }
  }
}

std::string IneqFamily::predicate_name(PredicateIndex idx) const {
  check_index(idx);
  const auto& p = pairs_[idx];
  return "x" + std::to_string(p.from) + (strict_ ? ">" : ">=") + "x" + std::to_string(p.to);
}

bool IneqFamily::evaluate_unchecked(PredicateIndex idx, const Assignment& a) const {
  const auto& p = pairs_[idx];
  const auto& lhs = a[p.from - 1];
  const auto& rhs = a[p.to - 1];
  return strict_ ? lhs > rhs : lhs >= rhs;
}

std::optional<PredicateIndex> IneqFamily::index_of(VarPair p) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i] == p) return static_cast<PredicateIndex>(i);
  }
  return std::nullopt;
}

std::vector<VarPair> IneqFamily::pairs_of(const PredicateSet& s) const {
  check_set(s);
  std::vector<VarPair> out;
  out.reserve(s.size());
  for (auto f : s) out.push_back(pairs_[f]);
  return out;
}

PredicateSet IneqFamily::set_of(const std::vector<VarPair>& pairs) const {
  std::vector<PredicateIndex> members;
  for (const auto& p : pairs) {
    auto idx = index_of(p);
    if (!idx) throw ValidationError("pair (" + std::to_string(p.from) + "," + std::to_string(p.to) + ") is not in the family");
    members.push_back(*idx);
  }
  return PredicateSet::from_unsorted(std::move(members));
}

bool IneqFamily::acyclic() const { return !ReachabilityMatrix::of(n_, pairs_).has_cycle(); }

const std::vector<Assignment>& IneqFamily::weak_orders() const {
  std::call_once(samples_once_, [this] {
    if (n_ > kDefaultCellSampleVariableCap) {
      throw GuardExceeded("weak-order enumeration is capped at " + std::to_string(kDefaultCellSampleVariableCap) +
                          " variables");
    }
    // Every map [n] -> [n] whose image is an initial segment 1..k.
    std::vector<long long> a(n_, 1);
    std::vector<Assignment> out;
    for (;;) {
      std::vector<bool> used(n_ + 1, false);
      long long top = 0;
      for (auto v : a) {
        used[static_cast<std::size_t>(v)] = true;
        top = std::max(top, v);
      }
      bool dense = true;
      for (long long v = 1; v <= top; ++v) dense = dense && used[static_cast<std::size_t>(v)];
      if (dense) out.push_back(Assignment::from_ints(a));
      std::size_t i = n_;
      while (i > 0 && a[i - 1] == static_cast<long long>(n_)) a[--i] = 1;
      if (i == 0) break;
      ++a[i - 1];
    }
    samples_ = std::move(out);
  });
  return samples_;
}

std::optional<std::vector<Assignment>> IneqFamily::cell_samples() const { return weak_orders(); }

bool IneqFamily::set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const {
  check_set(s1);
  check_set(s2);
  if (mode == Mode::And) return ineq_equal(*this, s1, s2);
  for (const auto& a : weak_orders()) {
    if (evaluate_set(s1, a, mode) != evaluate_set(s2, a, mode)) return false;
  }
  return true;
}

// --- Reachability -------------------------------------------------------------------

ReachabilityMatrix::ReachabilityMatrix(std::size_t n) : rows_(n, 0) {
  if (n > kMaxIneqVariables) throw ValidationError("reachability matrix supports at most 64 vertices");
}

ReachabilityMatrix ReachabilityMatrix::of(std::size_t n, const std::vector<VarPair>& edges) {
  ReachabilityMatrix r(n);
  for (const auto& e : edges) {
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) throw ValidationError("edge outside the vertex range");
    r.rows_[e.from - 1] |= std::uint64_t{1} << (e.to - 1);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::size_t i = 0; i < n; ++i) {
      if (r.rows_[i] & bit) r.rows_[i] |= r.rows_[k];
    }
  }
  return r;
}

bool ReachabilityMatrix::reaches(std::size_t from, std::size_t to) const {
  if (from < 1 || from > n() || to < 1 || to > n()) throw ValidationError("vertex outside the reachability matrix");
  return (rows_[from - 1] >> (to - 1)) & 1U;
}

bool ReachabilityMatrix::has_cycle() const {
  for (std::size_t i = 0; i < n(); ++i) {
    if ((rows_[i] >> i) & 1U) return true;
  }
  return false;
}

ReachabilityMatrix reach(const IneqFamily& family, const PredicateSet& s) {
  return ReachabilityMatrix::of(family.n(), family.pairs_of(s));
}

bool is_acyclic(const IneqFamily& family, const PredicateSet& s) { return !reach(family, s).has_cycle(); }

bool ineq_equal(const IneqFamily& family, const PredicateSet& s1, const PredicateSet& s2) {
  const auto r1 = reach(family, s1);
  const auto r2 = reach(family, s2);
  if (family.strict()) {
    const bool c1 = r1.has_cycle();
    const bool c2 = r2.has_cycle();
    if (c1 || c2) return c1 && c2;
  }
  return r1 == r2;
}

PredicateSet ineq_representative(const IneqFamily& family, const PredicateSet& s) {
  const auto r = reach(family, s);
  if (family.strict() && r.has_cycle()) return PredicateSet::full(family.size());
  PredicateSet out = s;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& p = family.pair(static_cast<PredicateIndex>(i));
    if (r.reaches(p.from, p.to)) out.insert(static_cast<PredicateIndex>(i));
  }
  return out;
}

// --- Descendants and witnesses ---------------------------------------------------

namespace {

bool still_reaches_without(const IneqFamily& family, const PredicateSet& g, PredicateIndex dropped) {
  PredicateSet reduced = g;
  reduced.erase(dropped);
  const auto& p = family.pair(dropped);
  return reach(family, reduced).reaches(p.from, p.to);
}

Assignment levels_to_assignment(const std::vector<std::size_t>& levels) {
  std::vector<long long> values(levels.begin(), levels.end());
  return Assignment::from_ints(values);
}

}  // namespace

std::vector<PredicateSet> ineq_imm_descendants(const IneqFamily& family, const PredicateSet& g) {
  family.check_set(g);
  if (family.strict() && reach(family, g).has_cycle()) {
    if (g != PredicateSet::full(family.size())) {
      throw ValidationError("cyclic set " + to_string(g) + " is not a representative");
    }
    return enumerate_max_acyclic(family);
  }
  std::vector<PredicateSet> out;
  for (auto f : g) {
    if (still_reaches_without(family, g, f)) continue;
    PredicateSet child = g;
    child.erase(f);
    out.push_back(std::move(child));
  }
  return out;
}

std::optional<std::vector<std::size_t>> layer_levels(std::size_t n, const std::vector<VarPair>& edges) {
  std::vector<std::vector<std::size_t>> out_edges(n + 1);
  std::vector<std::size_t> out_degree(n + 1, 0);
  std::vector<std::vector<std::size_t>> in_edges(n + 1);
  for (const auto& e : edges) {
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) throw ValidationError("edge outside the vertex range");
    if (e.from == e.to) return std::nullopt;
    out_edges[e.from].push_back(e.to);
    in_edges[e.to].push_back(e.from);
    ++out_degree[e.from];
  }
  // Peel sinks in ascending vertex order; a vertex's level is one more than
  // the highest level among its targets.
  std::vector<std::size_t> level(n + 1, 0);
  std::vector<std::size_t> ready;
  for (std::size_t v = n; v >= 1; --v) {
    if (out_degree[v] == 0) ready.push_back(v);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++done;
    std::size_t lv = 1;
    for (auto w : out_edges[v]) lv = std::max(lv, level[w] + 1);
    level[v] = lv;
    for (auto u : in_edges[v]) {
      if (--out_degree[u] == 0) ready.push_back(u);
    }
  }
  if (done != n) return std::nullopt;
  return std::vector<std::size_t>(level.begin() + 1, level.end());
}

Assignment toposort_assignment(const IneqFamily& family, const PredicateSet& s) {
  auto levels = layer_levels(family.n(), family.pairs_of(s));
  if (!levels) throw ValidationError("set " + to_string(s) + " is cyclic and has no topological sorting");
  return levels_to_assignment(*levels);
}

Assignment ineq_witness(const IneqFamily& family, const PredicateSet& g, const PredicateSet& child) {
  family.check_set(g);
  family.check_set(child);
  if (!child.is_proper_subset_of(g)) throw ValidationError("witness needs a child strictly inside the parent");

  Assignment a;
  if (family.strict() && reach(family, g).has_cycle()) {
    // Zero function at the top: any sorting of the acyclic child separates.
    a = toposort_assignment(family, child);
  } else {
    const PredicateSet dropped = g.minus(child);
    if (dropped.size() != 1) {
      throw ValidationError("child " + to_string(child) + " is not an immediate descendant of " + to_string(g));
    }
    const auto& rs = family.pair(dropped.members().front());
    const auto kept = family.pairs_of(child);
    std::optional<std::vector<std::size_t>> levels;
    if (family.strict()) {
      // Identify s with r, then layer the quotient graph.
      std::vector<VarPair> merged;
      for (auto e : kept) {
        if (e.from == rs.to) e.from = rs.from;
        if (e.to == rs.to) e.to = rs.from;
        if (e.from != e.to) merged.push_back(e);
      }
      levels = layer_levels(family.n(), merged);
      if (levels) (*levels)[rs.to - 1] = (*levels)[rs.from - 1];
    } else {
      std::vector<VarPair> flipped = kept;
      flipped.push_back({rs.to, rs.from});
      levels = layer_levels(family.n(), flipped);
    }
    if (!levels) {
      throw ValidationError("child " + to_string(child) + " is not an immediate descendant of " + to_string(g));
    }
    a = levels_to_assignment(*levels);
  }
  if (!family.evaluate_set(child, a, Mode::And) || family.evaluate_set(g, a, Mode::And)) {
    throw InternalError("constructed witness " + to_string(a) + " does not separate " + to_string(g) + " from " +
                        to_string(child));
  }
  return a;
}

// --- Maximal acyclic subgraphs ----------------------------------------------------

namespace {

class MaxAcyclicSearch {
 public:
  MaxAcyclicSearch(std::size_t n, const std::vector<VarPair>& edges) : n_(n), edges_(edges) {}

  std::vector<std::vector<std::size_t>> run() {
    included_.clear();
    excluded_.clear();
    recurse(0);
    std::sort(results_.begin(), results_.end());
    results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
    return std::move(results_);
  }

 private:
  std::vector<VarPair> chosen_edges() const {
    std::vector<VarPair> out;
    for (auto i : included_) out.push_back(edges_[i]);
    return out;
  }

  void recurse(std::size_t k) {
    const auto included_reach = ReachabilityMatrix::of(n_, chosen_edges());
    // Every excluded edge must end up closing a cycle; drop branches where
    // that can no longer happen even with all undecided edges added.
    if (!excluded_.empty()) {
      auto optimistic = chosen_edges();
      for (std::size_t j = k; j < edges_.size(); ++j) optimistic.push_back(edges_[j]);
      const auto r = ReachabilityMatrix::of(n_, optimistic);
      for (auto i : excluded_) {
        if (!r.reaches(edges_[i].to, edges_[i].from)) return;
      }
    }
    if (k == edges_.size()) {
      for (auto i : excluded_) {
        if (!included_reach.reaches(edges_[i].to, edges_[i].from)) return;
      }
      results_.push_back(included_);
      return;
    }
    const auto& e = edges_[k];
    if (e.from == e.to || included_reach.reaches(e.to, e.from)) {
      // Adding it would close a cycle; it stays out and is already blocked.
      recurse(k + 1);
      return;
    }
    included_.push_back(k);
    recurse(k + 1);
    included_.pop_back();

    excluded_.push_back(k);
    recurse(k + 1);
    excluded_.pop_back();
  }

  std::size_t n_;
  const std::vector<VarPair>& edges_;
  std::vector<std::size_t> included_;
  std::vector<std::size_t> excluded_;
  std::vector<std::vector<std::size_t>> results_;
};

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_max_acyclic(std::size_t n, const std::vector<VarPair>& edges,
                                                            std::size_t guard) {
  if (edges.size() > guard) {
    throw GuardExceeded("maximal acyclic enumeration is capped at " + std::to_string(guard) + " edges, got " +
                        std::to_string(edges.size()));
  }
  return MaxAcyclicSearch(n, edges).run();
}

std::vector<PredicateSet> enumerate_max_acyclic(const IneqFamily& family, std::size_t guard) {
  std::vector<PredicateSet> out;
  for (const auto& subset : enumerate_max_acyclic(family.n(), family.pairs(), guard)) {
    std::vector<PredicateIndex> members(subset.begin(), subset.end());
    out.push_back(PredicateSet::from_unsorted(std::move(members)));
  }
  return out;
}

// --- IneqLattice ---------------------------------------------------------------------

IneqLattice::IneqLattice(std::shared_ptr<const IneqFamily> family, std::size_t enumeration_guard)
    : Lattice(family, Mode::And), ineq_(std::move(family)), guard_(enumeration_guard) {}

const ProbeLattice& IneqLattice::fallback() const {
  std::call_once(fallback_once_, [this] { fallback_ = std::make_unique<ProbeLattice>(family_ptr(), Mode::And); });
  return *fallback_;
}

bool IneqLattice::equal(const PredicateSet& s1, const PredicateSet& s2) const { return ineq_equal(*ineq_, s1, s2); }

PredicateSet IneqLattice::closure(const PredicateSet& s) const { return ineq_representative(*ineq_, s); }

std::vector<PredicateSet> IneqLattice::immediate_descendants(const PredicateSet& g) const {
  ineq_->check_set(g);
  if (reach(*ineq_, g).has_cycle()) {
    if (ineq_->strict()) {
      if (g != PredicateSet::full(ineq_->size())) {
        throw ValidationError("cyclic set " + to_string(g) + " is not a representative");
      }
      return enumerate_max_acyclic(*ineq_, guard_);
    }
    return fallback().immediate_descendants(g);
  }
  return ineq_imm_descendants(*ineq_, g);
}

Assignment IneqLattice::witness(const PredicateSet& g, const PredicateSet& child) const {
  if (!ineq_->strict() && reach(*ineq_, g).has_cycle()) return fallback().witness(g, child);
  return ineq_witness(*ineq_, g, child);
}

std::vector<Assignment> IneqLattice::query_pool() const { return *ineq_->cell_samples(); }

LearnResult learn_ineq(std::shared_ptr<const IneqFamily> family, Teacher& teacher) {
  return learn(std::make_shared<IneqLattice>(std::move(family)), teacher);
}

}  // namespace memlearn
