#include "memlearn/predicate.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "memlearn/errors.hpp"

namespace memlearn {

std::string_view to_string(Mode mode) { return mode == Mode::Or ? "or" : "and"; }

Mode parse_mode(std::string_view text) {
  if (text == "or") return Mode::Or;
  if (text == "and") return Mode::And;
  throw ValidationError("mode must be 'or' or 'and', got '" + std::string(text) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Table: return "table";
    case FamilyKind::Halfspace: return "halfspace";
    case FamilyKind::VarIneq: return "var_ineq";
  }
  return "?";
}

Assignment Assignment::from_ints(std::initializer_list<long long> values) {
  return from_ints(std::vector<long long>(values));
}

Assignment Assignment::from_ints(const std::vector<long long>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return Assignment(std::move(out));
}

std::string to_string(const Assignment& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << to_string(a[i]);
  }
  os << ')';
  return os.str();
}

PredicateSet::PredicateSet(std::initializer_list<PredicateIndex> members)
    : PredicateSet(from_unsorted(std::vector<PredicateIndex>(members))) {}

PredicateSet PredicateSet::from_unsorted(std::vector<PredicateIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PredicateSet s;
  s.members_ = std::move(members);
  return s;
}

PredicateSet PredicateSet::full(std::size_t family_size) {
  PredicateSet s;
  s.members_.resize(family_size);
  for (std::size_t i = 0; i < family_size; ++i) s.members_[i] = static_cast<PredicateIndex>(i);
  return s;
}

bool PredicateSet::contains(PredicateIndex idx) const {
  return std::binary_search(members_.begin(), members_.end(), idx);
}

bool PredicateSet::is_subset_of(const PredicateSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool PredicateSet::is_proper_subset_of(const PredicateSet& other) const {
  return size() < other.size() && is_subset_of(other);
}

void PredicateSet::insert(PredicateIndex idx) {
  auto it = std::lower_bound(members_.begin(), members_.end(), idx);
  if (it == members_.end() || *it != idx) members_.insert(it, idx);
}

void PredicateSet::erase(PredicateIndex idx) {
  auto it = std::lower_bound(members_.begin(), members_.end(), idx);
  if (it != members_.end() && *it == idx) members_.erase(it);
}

PredicateSet PredicateSet::union_with(const PredicateSet& other) const {
  PredicateSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

PredicateSet PredicateSet::intersect(const PredicateSet& other) const {
  PredicateSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

PredicateSet PredicateSet::minus(const PredicateSet& other) const {
  PredicateSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

std::string to_string(const PredicateSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto idx : s) {
    if (!first) os << ", ";
    os << idx;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string PredicateFamily::predicate_name(PredicateIndex idx) const {
  return "f" + std::to_string(idx);
}

void PredicateFamily::check_index(PredicateIndex idx) const {
  if (idx >= size()) {
    throw ValidationError("predicate index " + std::to_string(idx) + " out of range for family of size " +
                          std::to_string(size()));
  }
}

void PredicateFamily::check_set(const PredicateSet& s) const {
  if (!s.empty()) check_index(s.members().back());
}

void PredicateFamily::check_assignment(const Assignment& a) const {
  if (a.size() != domain_dim()) {
    throw ValidationError("assignment " + to_string(a) + " has dimension " + std::to_string(a.size()) +
                          ", family expects " + std::to_string(domain_dim()));
  }
}

bool PredicateFamily::evaluate(PredicateIndex idx, const Assignment& a) const {
  check_index(idx);
  check_assignment(a);
  return evaluate_unchecked(idx, a);
}

bool PredicateFamily::evaluate_set(const PredicateSet& s, const Assignment& a, Mode mode) const {
  check_set(s);
  check_assignment(a);
  if (mode == Mode::Or) {
    return std::any_of(s.begin(), s.end(), [&](PredicateIndex f) { return evaluate_unchecked(f, a); });
  }
  return std::all_of(s.begin(), s.end(), [&](PredicateIndex f) { return evaluate_unchecked(f, a); });
}

std::optional<Assignment> PredicateFamily::find_point(const SignCondition& sc) const {
  auto samples = cell_samples();
  if (!samples) {
    throw Error("family of kind '" + std::string(to_string(kind())) + "' has no sign-cell feasibility tester");
  }
  check_set(sc.positives);
  check_set(sc.negatives);
  for (const auto& p : *samples) {
    bool ok = std::all_of(sc.positives.begin(), sc.positives.end(),
                          [&](PredicateIndex f) { return evaluate_unchecked(f, p); }) &&
              std::none_of(sc.negatives.begin(), sc.negatives.end(),
                           [&](PredicateIndex f) { return evaluate_unchecked(f, p); });
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace memlearn
