#include "memlearn/halfspace.hpp"

#include <sstream>

#include "memlearn/errors.hpp"
#include "memlearn/learner.hpp"
#include "memlearn/simplex.hpp"

namespace memlearn {

bool Halfspace::is_constant() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool Halfspace::holds(const Assignment& x) const {
  Rational lhs = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * x[i];
  return lhs >= threshold;
}

HalfspaceFamily::HalfspaceFamily(std::size_t dim, std::vector<Halfspace> halfspaces, std::size_t dim_cap)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
  if (dim_ == 0) throw ValidationError("halfspace dimension must be >= 1");
  if (dim_ > dim_cap) {
    throw GuardExceeded("halfspace dimension " + std::to_string(dim_) + " exceeds the cap of " +
                        std::to_string(dim_cap));
  }
  if (halfspaces_.empty()) throw ValidationError("halfspace family needs at least one predicate");
  for (std::size_t i = 0; i < halfspaces_.size(); ++i) {
    if (halfspaces_[i].coeffs.size() != dim_) {
      throw ValidationError("halfspace " + std::to_string(i) + " has " +
                            std::to_string(halfspaces_[i].coeffs.size()) + " coefficients, expected " +
                            std::to_string(dim_));
    }
  }
}

std::string HalfspaceFamily::predicate_name(PredicateIndex idx) const {
  const auto& h = halfspaces_.at(idx);
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
    if (h.coeffs[i] == 0) continue;
    if (!first) os << " + ";
    os << to_string(h.coeffs[i]) << "*x" << (i + 1);
    first = false;
  }
  if (first) os << '0';
  os << " >= " << to_string(h.threshold) << ']';
  return os.str();
}

bool HalfspaceFamily::evaluate_unchecked(PredicateIndex idx, const Assignment& a) const {
  return halfspaces_[idx].holds(a);
}

const CriticalPointSet& HalfspaceFamily::critical_points() const {
  std::call_once(critical_once_, [this] { critical_ = build_halfspace_critical_points(*this); });
  return critical_;
}

bool HalfspaceFamily::set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const {
  check_set(s1);
  check_set(s2);
  for (const auto& sig : critical_points().signatures) {
    auto value = [&](const PredicateSet& s) {
      if (mode == Mode::Or) {
        for (auto f : s)
          if (sig[f]) return true;
        return false;
      }
      for (auto f : s)
        if (!sig[f]) return false;
      return true;
    };
    if (value(s1) != value(s2)) return false;
  }
  return true;
}

std::optional<Assignment> HalfspaceFamily::find_point(const SignCondition& sc) const {
  return feasible(*this, sc);
}

std::optional<Assignment> feasible(const HalfspaceFamily& family, const SignCondition& sc) {
  family.check_set(sc.positives);
  family.check_set(sc.negatives);
  if (!sc.positives.intersect(sc.negatives).empty()) return std::nullopt;

  // Variables: x+ (d), x- (d), slack s.
  const std::size_t d = family.domain_dim();
  const std::size_t width = 2 * d + 1;
  LinearProgram lp;
  auto add_row = [&](const Halfspace& h, int sign, const Rational& rhs, bool with_slack) {
    std::vector<Rational> row(width, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      row[i] = sign * h.coeffs[i];
      row[d + i] = -sign * h.coeffs[i];
    }
    if (with_slack) row[2 * d] = 1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(rhs);
  };
  for (auto f : sc.positives) {
    const auto& h = family.halfspace(f);
    add_row(h, -1, -h.threshold, false);  // -a.x <= -b
  }
  for (auto f : sc.negatives) {
    const auto& h = family.halfspace(f);
    add_row(h, 1, h.threshold, true);  // a.x + s <= b
  }
  std::vector<Rational> cap(width, Rational(0));
  cap[2 * d] = 1;
  lp.a.push_back(std::move(cap));
  lp.b.emplace_back(1);
  lp.c.assign(width, Rational(0));
  lp.c[2 * d] = 1;

  LpResult r = solve_lp(lp);
  if (r.status == LpStatus::Unbounded) throw InternalError("slack LP reported unbounded");
  if (r.status == LpStatus::Infeasible || r.objective <= 0) return std::nullopt;

  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = r.solution[i] - r.solution[d + i];
  Assignment point(std::move(x));
  for (auto f : sc.positives) {
    if (!family.halfspace(f).holds(point)) throw InternalError("LP point violates a positive halfspace");
  }
  for (auto f : sc.negatives) {
    if (family.halfspace(f).holds(point)) throw InternalError("LP point violates a negative halfspace");
  }
  return point;
}

std::size_t critical_point_bound(std::size_t family_size, std::size_t dim) {
  if (family_size < 2) return 2;
  std::size_t bound = 1;
  for (std::size_t i = 0; i <= dim; ++i) bound *= family_size;
  return bound;
}

CriticalPointSet build_halfspace_critical_points(const HalfspaceFamily& family) {
  CriticalPointSet c = build_critical_points(family);
  const std::size_t bound = critical_point_bound(family.size(), family.domain_dim());
  if (c.size() > bound) {
    throw InternalError("critical point set of size " + std::to_string(c.size()) + " exceeds the bound " +
                        std::to_string(bound));
  }
  return c;
}

LearnResult learn_halfspace_union(std::shared_ptr<const HalfspaceFamily> family, Teacher& teacher, Mode mode) {
  family->critical_points();
  return learn(make_lattice(family, mode), teacher);
}

}  // namespace memlearn
