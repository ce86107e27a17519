#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "memlearn/predicate.hpp"

namespace memlearn {

// Canonical element of a logical-equivalence class: the largest predicate set
// whose join (meet in And mode) is the class's function.
struct Representative {
  PredicateSet set;
  Mode mode = Mode::Or;

  friend bool operator==(const Representative&, const Representative&) = default;
};

// One sample point per realizable full sign condition of a family.
struct CriticalPointSet {
  std::vector<Assignment> points;
  std::vector<std::vector<bool>> signatures;  // signatures[p][f] = f(points[p])

  std::size_t size() const { return points.size(); }
};

// Cell-splitting construction over f_1..f_t: every realizable cell over the
// first i predicates is split by f_{i+1} and its negation, keeping the
// non-empty halves. Families with cell_samples() split their sample lists;
// the rest call find_point once per half that the cell's current point does
// not already witness.
CriticalPointSet build_critical_points(const PredicateFamily& family);

// A family viewed in one mode: the partial order of representatives plus the
// family-specific strategies for immediate descendants and witnesses.
class Lattice {
 public:
  virtual ~Lattice() = default;

  const PredicateFamily& family() const { return *family_; }
  const std::shared_ptr<const PredicateFamily>& family_ptr() const { return family_; }
  Mode mode() const { return mode_; }

  virtual bool equal(const PredicateSet& s1, const PredicateSet& s2) const;
  virtual PredicateSet closure(const PredicateSet& s) const;

  // Grow seed inside g by ascending index while the join
  // stays different from g. Requires seed within g and join(seed) != g.
  virtual PredicateSet climb(const PredicateSet& g, const PredicateSet& seed) const;

  // All immediate descendants of representative g, in discovery order.
  virtual std::vector<PredicateSet> immediate_descendants(const PredicateSet& g) const = 0;

  // A point where g holds and child does not (Or mode), or where child holds
  // and g does not (And mode). child must be an immediate descendant of g.
  virtual Assignment witness(const PredicateSet& g, const PredicateSet& child) const = 0;

  // Points that may be offered as queries; distinguishes every pair of
  // representatives. Used by the minimax oracle.
  virtual std::vector<Assignment> query_pool() const = 0;

  // The join (Or) or meet (And) of s at a.
  bool holds(const PredicateSet& s, const Assignment& a) const { return family_->evaluate_set(s, a, mode_); }
  // Literal value under the mode: f(a) in Or mode, !f(a) in And mode. Under
  // this view And mode is Or mode over complemented predicates.
  bool literal(PredicateIndex f, const Assignment& a) const { return family_->evaluate(f, a) != (mode_ == Mode::And); }

  PredicateSet top() const { return closure(PredicateSet::full(family_->size())); }
  PredicateSet bottom() const { return closure(PredicateSet{}); }

 protected:
  Lattice(std::shared_ptr<const PredicateFamily> family, Mode mode);

 private:
  std::shared_ptr<const PredicateFamily> family_;
  Mode mode_;
};

// Generic strategy over a finite probe set that meets every sign cell (the
// critical points). Every predicate becomes a bit vector over the probes, so
// equality, closure and the descendant completeness test are bitwise.
class ProbeLattice final : public Lattice {
 public:
  ProbeLattice(std::shared_ptr<const PredicateFamily> family, Mode mode, CriticalPointSet probes);
  ProbeLattice(std::shared_ptr<const PredicateFamily> family, Mode mode);

  bool equal(const PredicateSet& s1, const PredicateSet& s2) const override;
  PredicateSet closure(const PredicateSet& s) const override;
  PredicateSet climb(const PredicateSet& g, const PredicateSet& seed) const override;
  std::vector<PredicateSet> immediate_descendants(const PredicateSet& g) const override;
  Assignment witness(const PredicateSet& g, const PredicateSet& child) const override;
  std::vector<Assignment> query_pool() const override { return probes_.points; }

  const CriticalPointSet& probes() const { return probes_; }

  // First probe where g holds and union of the descendant cells built from
  // found does not, or nullopt once found is complete.
  std::optional<std::size_t> completeness_counterexample(const PredicateSet& g,
                                                         const std::vector<PredicateSet>& found) const;

 private:
  using Bits = boost::dynamic_bitset<>;
  Bits join(const PredicateSet& s) const;

  CriticalPointSet probes_;
  std::vector<Bits> literal_bits_;  // per predicate, literal value at each probe
};

// Picks the family's strategy: constructive descendants for inequality
// families in And mode, probe-based everywhere else.
std::shared_ptr<const Lattice> make_lattice(std::shared_ptr<const PredicateFamily> family, Mode mode);

// --- Operations on representatives -------------------------------------------

Representative closure(const Lattice& lattice, const PredicateSet& s);
bool is_representative(const Lattice& lattice, const PredicateSet& s);
// Lowest common ascendant: closure of the union.
Representative lca(const Lattice& lattice, const Representative& g1, const Representative& g2);
// Greatest common descendant: the intersection, which is already closed.
Representative gcd_rep(const Lattice& lattice, const Representative& g1, const Representative& g2);
Representative get_imm_de(const Lattice& lattice, const Representative& g, const PredicateSet& seed);
// Members of g whose literal vanishes on every point of pts. Each point must
// satisfy g.
PredicateSet z_set(const Lattice& lattice, const Representative& g, std::span<const Assignment> pts);
std::vector<Representative> all_imm_de(const Lattice& lattice, const Representative& g);
Assignment find_witness(const Lattice& lattice, const Representative& g, const Representative& child);

// --- Hasse diagram -------------------------------------------------------------

struct HasseDiagram {
  std::vector<Representative> nodes;                  // nodes[0] is the top
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (parent, child)

  std::optional<std::size_t> index_of(const PredicateSet& s) const;
  std::size_t max_out_degree() const;
};

inline constexpr std::size_t kDefaultHasseCap = 10000;

// Breadth-first expansion from the top by immediate descendants. Throws
// GuardExceeded once more than cap nodes are discovered.
HasseDiagram build_hasse(const Lattice& lattice, std::size_t cap = kDefaultHasseCap);

// Node label: sorted member indices. Edge: parent -> child.
std::string to_dot(const HasseDiagram& diagram, const PredicateFamily& family);

}  // namespace memlearn
