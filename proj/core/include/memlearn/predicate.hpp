#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "memlearn/rational.hpp"

namespace memlearn {

using PredicateIndex = std::uint32_t;

// Whether a predicate set denotes the disjunction or the conjunction of its
// members. Conjunction mode is learned by the dual algorithm.
enum class Mode { Or, And };

enum class FamilyKind { Table, Halfspace, VarIneq };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);
std::string_view to_string(FamilyKind kind);

// A point of a family's domain. Values are exact rationals.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Rational> values) : values_(std::move(values)) {}
  Assignment(std::initializer_list<Rational> values) : values_(values) {}

  static Assignment from_ints(std::initializer_list<long long> values);
  static Assignment from_ints(const std::vector<long long>& values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Assignment& a, const Assignment& b) { return a.values_ == b.values_; }
  friend bool operator<(const Assignment& a, const Assignment& b) { return a.values_ < b.values_; }

 private:
  std::vector<Rational> values_;
};

std::string to_string(const Assignment& a);  // "(1, 3/2, 2)"

// Canonical predicate-index set: strictly ascending, duplicate free. Two sets
// are equal exactly when their member lists are equal.
class PredicateSet {
 public:
  using const_iterator = std::vector<PredicateIndex>::const_iterator;

  PredicateSet() = default;
  PredicateSet(std::initializer_list<PredicateIndex> members);
  static PredicateSet from_unsorted(std::vector<PredicateIndex> members);
  static PredicateSet full(std::size_t family_size);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<PredicateIndex>& members() const { return members_; }

  bool contains(PredicateIndex idx) const;
  bool is_subset_of(const PredicateSet& other) const;
  bool is_proper_subset_of(const PredicateSet& other) const;

  void insert(PredicateIndex idx);
  void erase(PredicateIndex idx);

  PredicateSet union_with(const PredicateSet& other) const;
  PredicateSet intersect(const PredicateSet& other) const;
  PredicateSet minus(const PredicateSet& other) const;

  friend bool operator==(const PredicateSet&, const PredicateSet&) = default;
  friend bool operator<(const PredicateSet& a, const PredicateSet& b) { return a.members_ < b.members_; }

 private:
  std::vector<PredicateIndex> members_;
};

std::string to_string(const PredicateSet& s);  // "{0, 2, 3}"

// H_{S,R}: every positive predicate holds and every negative one fails.
struct SignCondition {
  PredicateSet positives;
  PredicateSet negatives;
};

// A finite indexed family of boolean predicates over a fixed-dimension
// domain. Instances are immutable after construction.
class PredicateFamily {
 public:
  virtual ~PredicateFamily() = default;

  virtual FamilyKind kind() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::size_t domain_dim() const = 0;
  virtual std::string predicate_name(PredicateIndex idx) const;

  bool evaluate(PredicateIndex idx, const Assignment& a) const;
  // Or over the members (0 for the empty set), or And (1 for the empty set).
  bool evaluate_set(const PredicateSet& s, const Assignment& a, Mode mode) const;

  // Functional equality of the joins (meets in And mode) over the whole domain.
  virtual bool set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const = 0;

  // A finite point list that meets every realizable sign cell, when the family
  // has one small enough to enumerate. Families without one must implement
  // find_point directly.
  virtual std::optional<std::vector<Assignment>> cell_samples() const { return std::nullopt; }

  // Some point of the sign cell, or nullopt when it is empty. The default
  // scans cell_samples().
  virtual std::optional<Assignment> find_point(const SignCondition& sc) const;

  void check_index(PredicateIndex idx) const;
  void check_set(const PredicateSet& s) const;
  void check_assignment(const Assignment& a) const;

 protected:
  virtual bool evaluate_unchecked(PredicateIndex idx, const Assignment& a) const = 0;
};

}  // namespace memlearn
