#pragma once

#include <map>
#include <string>
#include <vector>

#include "memlearn/predicate.hpp"

namespace memlearn {

// Predicates given extensionally: an explicit finite domain and one truth row
// per predicate. Equality is decided on the full domain.
class TableFamily final : public PredicateFamily {
 public:
  // rows[f][p] is the value of predicate f on domain[p].
  TableFamily(std::vector<Assignment> domain, std::vector<std::vector<bool>> rows,
              std::vector<std::string> names = {});

  FamilyKind kind() const override { return FamilyKind::Table; }
  std::size_t size() const override { return rows_.size(); }
  std::size_t domain_dim() const override { return dim_; }
  std::string predicate_name(PredicateIndex idx) const override;

  bool set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const override;
  std::optional<std::vector<Assignment>> cell_samples() const override { return domain_; }

  const std::vector<Assignment>& domain() const { return domain_; }
  const std::vector<std::vector<bool>>& rows() const { return rows_; }
  const std::vector<std::string>& names() const { return names_; }
  bool truth(PredicateIndex f, std::size_t point) const { return rows_[f][point]; }
  std::optional<std::size_t> locate(const Assignment& a) const;

 protected:
  bool evaluate_unchecked(PredicateIndex idx, const Assignment& a) const override;

 private:
  std::vector<Assignment> domain_;
  std::vector<std::vector<bool>> rows_;
  std::vector<std::string> names_;
  std::map<Assignment, std::size_t> index_;
  std::size_t dim_ = 0;
};

// Ray^d_m: predicates [x_i >= j] over {1..m}^d, named "f<i><j>" and ordered
// by (i, j). Ray^2_2 is the four-predicate example with five representatives.
TableFamily make_ray_family(std::size_t dim, std::size_t levels);

}  // namespace memlearn
