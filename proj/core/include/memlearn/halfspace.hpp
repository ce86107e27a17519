#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "memlearn/lattice.hpp"
#include "memlearn/predicate.hpp"

namespace memlearn {

class Teacher;
struct LearnResult;

// [a . x >= b]. All-zero coefficients give a constant predicate.
struct Halfspace {
  std::vector<Rational> coeffs;
  Rational threshold;

  bool is_constant() const;
  bool holds(const Assignment& x) const;
};

inline constexpr std::size_t kDefaultHalfspaceDimCap = 3;

// Halfspaces over Q^d. Critical points are built once, on first use, by
// exact linear feasibility; equality of joins is decided on them.
class HalfspaceFamily final : public PredicateFamily {
 public:
  HalfspaceFamily(std::size_t dim, std::vector<Halfspace> halfspaces,
                  std::size_t dim_cap = kDefaultHalfspaceDimCap);

  FamilyKind kind() const override { return FamilyKind::Halfspace; }
  std::size_t size() const override { return halfspaces_.size(); }
  std::size_t domain_dim() const override { return dim_; }
  std::string predicate_name(PredicateIndex idx) const override;

  bool set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const override;
  std::optional<Assignment> find_point(const SignCondition& sc) const override;

  const Halfspace& halfspace(PredicateIndex idx) const { return halfspaces_.at(idx); }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const CriticalPointSet& critical_points() const;

 protected:
  bool evaluate_unchecked(PredicateIndex idx, const Assignment& a) const override;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  mutable std::once_flag critical_once_;
  mutable CriticalPointSet critical_;
};

// A rational point with a.x >= b on every positive and a.x < b on every
// negative, found by maximizing a slack s (a.x <= b - s on negatives, s <= 1);
// the cell is non-empty exactly when the optimum s is positive.
std::optional<Assignment> feasible(const HalfspaceFamily& family, const SignCondition& sc);

// Upper bound asserted on |C|: |F|^(d+1) for |F| >= 2, and 2 for a single
// predicate, which can still cut the space in two.
std::size_t critical_point_bound(std::size_t family_size, std::size_t dim);

CriticalPointSet build_halfspace_critical_points(const HalfspaceFamily& family);

// Builds critical points and runs the learner. Or mode learns unions of
// halfspaces; And mode learns polytopes with sides from the family.
LearnResult learn_halfspace_union(std::shared_ptr<const HalfspaceFamily> family, Teacher& teacher,
                                  Mode mode = Mode::Or);

}  // namespace memlearn
