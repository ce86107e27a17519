#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "memlearn/lattice.hpp"
#include "memlearn/predicate.hpp"

namespace memlearn {

class Teacher;
struct LearnResult;

// Directed pair (from, to) over 1-based variables; the predicate is
// [x_from > x_to], or [x_from >= x_to] in a non-strict family.
struct VarPair {
  std::size_t from = 0;
  std::size_t to = 0;

  friend bool operator==(const VarPair&, const VarPair&) = default;
  friend auto operator<=>(const VarPair&, const VarPair&) = default;
};

inline constexpr std::size_t kMaxIneqVariables = 64;
inline constexpr std::size_t kDefaultCellSampleVariableCap = 7;

// Conjunction-friendly family {[x_i > x_j] : (i, j) in I}. Predicate index k
// is the k-th pair as given. Diagonal and duplicate pairs are rejected.
class IneqFamily final : public PredicateFamily {
 public:
  IneqFamily(std::size_t n, std::vector<VarPair> pairs, bool strict = true);

  FamilyKind kind() const override { return FamilyKind::VarIneq; }
  std::size_t size() const override { return pairs_.size(); }
  std::size_t domain_dim() const override { return n_; }
  std::string predicate_name(PredicateIndex idx) const override;

  // And mode: reachability matrices (with the all-cyclic-means-zero rule in
  // strict families). Or mode: comparison on the weak-order samples.
  bool set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const override;

  // One rank-compressed assignment per weak order of the variables. Every
  // sign cell of the family contains one. Guarded to n <= 7.
  std::optional<std::vector<Assignment>> cell_samples() const override;

  std::size_t n() const { return n_; }
  bool strict() const { return strict_; }
  const std::vector<VarPair>& pairs() const { return pairs_; }
  const VarPair& pair(PredicateIndex idx) const { return pairs_.at(idx); }
  std::optional<PredicateIndex> index_of(VarPair p) const;
  std::vector<VarPair> pairs_of(const PredicateSet& s) const;
  PredicateSet set_of(const std::vector<VarPair>& pairs) const;
  bool acyclic() const;

 protected:
  bool evaluate_unchecked(PredicateIndex idx, const Assignment& a) const override;

 private:
  const std::vector<Assignment>& weak_orders() const;

  std::size_t n_;
  std::vector<VarPair> pairs_;
  bool strict_;
  mutable std::once_flag samples_once_;
  mutable std::vector<Assignment> samples_;
};

// n x n reachability over vertices 1..n: reaches(i, j) iff a non-empty
// directed path i -> j exists.
class ReachabilityMatrix {
 public:
  explicit ReachabilityMatrix(std::size_t n);
  static ReachabilityMatrix of(std::size_t n, const std::vector<VarPair>& edges);

  std::size_t n() const { return rows_.size(); }
  bool reaches(std::size_t from, std::size_t to) const;
  bool has_cycle() const;

  friend bool operator==(const ReachabilityMatrix&, const ReachabilityMatrix&) = default;

 private:
  std::vector<std::uint64_t> rows_;  // bit j-1 of rows_[i-1]
};

ReachabilityMatrix reach(const IneqFamily& family, const PredicateSet& s);
bool is_acyclic(const IneqFamily& family, const PredicateSet& s);

// Conjunction equality. Acyclic sets compare by reachability; in strict
// families every cyclic set is the zero function.
bool ineq_equal(const IneqFamily& family, const PredicateSet& s1, const PredicateSet& s2);

// s plus every pair of I already implied by a path; the whole of I when s is
// cyclic in a strict family.
PredicateSet ineq_representative(const IneqFamily& family, const PredicateSet& s);

// Immediate descendants: for acyclic g, every g \ {(r,s)} with no remaining
// r -> s path, in pair-index order. For the zero function of a strict cyclic
// family, the maximal acyclic subgraphs of I.
std::vector<PredicateSet> ineq_imm_descendants(const IneqFamily& family, const PredicateSet& g);

// Witness for g and its immediate descendant child. Strict: merge r and s,
// layer the merged graph, so a_r == a_s. Non-strict: layer child plus the
// reversed edge (s, r), so a_s > a_r.
Assignment ineq_witness(const IneqFamily& family, const PredicateSet& g, const PredicateSet& child);

// Longest-path layering: sinks get 1 and every source exceeds its targets.
// Values stay in [1..n]. Throws ValidationError on cyclic input.
Assignment toposort_assignment(const IneqFamily& family, const PredicateSet& s);
std::optional<std::vector<std::size_t>> layer_levels(std::size_t n, const std::vector<VarPair>& edges);

inline constexpr std::size_t kDefaultEnumerationGuard = 20;

// All maximal acyclic edge subsets, as sorted edge-index lists in ascending
// lexicographic order. Branch and bound over edges in index order: an edge
// that would close a cycle is forced out; otherwise both branches are tried,
// and an excluded edge (u, v) is kept only while a v -> u path can still
// appear among the included and undecided edges. Exponential in the worst
// case.
std::vector<std::vector<std::size_t>> enumerate_max_acyclic(std::size_t n, const std::vector<VarPair>& edges,
                                                            std::size_t guard = kDefaultEnumerationGuard);
std::vector<PredicateSet> enumerate_max_acyclic(const IneqFamily& family,
                                                std::size_t guard = kDefaultEnumerationGuard);

// And-mode lattice of an inequality family, wired to the constructive
// operations above. Non-strict sets with cycles go to a probe lattice over
// the weak-order samples.
class IneqLattice final : public Lattice {
 public:
  explicit IneqLattice(std::shared_ptr<const IneqFamily> family, std::size_t enumeration_guard = kDefaultEnumerationGuard);

  bool equal(const PredicateSet& s1, const PredicateSet& s2) const override;
  PredicateSet closure(const PredicateSet& s) const override;
  std::vector<PredicateSet> immediate_descendants(const PredicateSet& g) const override;
  Assignment witness(const PredicateSet& g, const PredicateSet& child) const override;
  std::vector<Assignment> query_pool() const override;

  const IneqFamily& ineq() const { return *ineq_; }

 private:
  const ProbeLattice& fallback() const;

  std::shared_ptr<const IneqFamily> ineq_;
  std::size_t guard_;
  mutable std::once_flag fallback_once_;
  mutable std::unique_ptr<ProbeLattice> fallback_;
};

LearnResult learn_ineq(std::shared_ptr<const IneqFamily> family, Teacher& teacher);

}  // namespace memlearn
