#include "memlearn/table_family.hpp"

#include "memlearn/errors.hpp"

namespace memlearn {

TableFamily::TableFamily(std::vector<Assignment> domain, std::vector<std::vector<bool>> rows,
                         std::vector<std::string> names)
    : domain_(std::move(domain)), rows_(std::move(rows)), names_(std::move(names)) {
  if (domain_.empty()) throw ValidationError("table family needs at least one domain point");
  if (rows_.empty()) throw ValidationError("table family needs at least one predicate");
  dim_ = domain_.front().size();
  if (dim_ == 0) throw ValidationError("domain points must have dimension >= 1");
  for (std::size_t p = 0; p < domain_.size(); ++p) {
    if (domain_[p].size() != dim_) throw ValidationError("domain points have inconsistent dimensions");
    if (!index_.emplace(domain_[p], p).second) {
      throw ValidationError("duplicate domain point " + to_string(domain_[p]));
    }
  }
  for (std::size_t f = 0; f < rows_.size(); ++f) {
    if (rows_[f].size() != domain_.size()) {
      throw ValidationError("truth row " + std::to_string(f) + " has " + std::to_string(rows_[f].size()) +
                            " entries, domain has " + std::to_string(domain_.size()));
    }
  }
  if (!names_.empty() && names_.size() != rows_.size()) {
    throw ValidationError("names list length does not match predicate count");
  }
}

std::string TableFamily::predicate_name(PredicateIndex idx) const {
  if (idx < names_.size()) return names_[idx];
  return PredicateFamily::predicate_name(idx);
}

std::optional<std::size_t> TableFamily::locate(const Assignment& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TableFamily::evaluate_unchecked(PredicateIndex idx, const Assignment& a) const {
  auto p = locate(a);
  if (!p) throw ValidationError("assignment " + to_string(a) + " is outside the table domain");
  return rows_[idx][*p];
}

bool TableFamily::set_equal(const PredicateSet& s1, const PredicateSet& s2, Mode mode) const {
  check_set(s1);
  check_set(s2);
  for (std::size_t p = 0; p < domain_.size(); ++p) {
    auto value = [&](const PredicateSet& s) {
      if (mode == Mode::Or) {
        for (auto f : s)
          if (rows_[f][p]) return true;
        return false;
      }
      for (auto f : s)
        if (!rows_[f][p]) return false;
      return true;
    };
    if (value(s1) != value(s2)) return false;
  }
  return true;
}

TableFamily make_ray_family(std::size_t dim, std::size_t levels) {
  if (dim == 0 || levels == 0) throw ValidationError("ray family needs dim >= 1 and levels >= 1");
  std::vector<Assignment> domain;
  std::vector<long long> cur(dim, 1);
  auto advance = [&] {
    for (std::size_t i = dim; i-- > 0;) {
      if (cur[i] < static_cast<long long>(levels)) {
        ++cur[i];
        return true;
      }
      cur[i] = 1;
    }
    return false;
  };
  do {
    domain.push_back(Assignment::from_ints(cur));
  } while (advance());
  std::vector<std::vector<bool>> rows;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 1; j <= levels; ++j) {
      std::vector<bool> row;
      for (const auto& p : domain) row.push_back(p[i] >= Rational(static_cast<long long>(j)));
      rows.push_back(std::move(row));
      names.push_back("f" + std::to_string(i + 1) + std::to_string(j));
    }
  }
  return TableFamily(std::move(domain), std::move(rows), std::move(names));
}

}  // namespace memlearn
