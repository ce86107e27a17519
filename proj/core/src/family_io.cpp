#include "memlearn/family_io.hpp"

#include <fstream>
#include <set>

#include "memlearn/errors.hpp"
#include "memlearn/halfspace.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/table_family.hpp"

namespace memlearn {

using nlohmann::json;

namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError("unknown key \"" + key + "\"");
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t positive_int(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ValidationError(std::string(what) + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw ValidationError("expected a rational as an integer or string, got " + j.dump());
}

bool bit_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v == 0 || v == 1) return v == 1;
  }
  throw ValidationError("expected 0/1 or a boolean, got " + j.dump());
}

VarPair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ValidationError("pair must be a 2-element integer list, got " + j.dump());
  }
  auto a = j[0].get<long long>();
  auto b = j[1].get<long long>();
  if (a < 1 || b < 1) throw ValidationError("pair entries are 1-based, got " + j.dump());
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

std::shared_ptr<const PredicateFamily> table_from_json(const json& j) {
  reject_unknown_keys(j, {"kind", "domain", "rows", "names"});
  std::vector<Assignment> domain;
  const auto& d = field(j, "domain");
  if (!d.is_array()) throw ValidationError("\"domain\" must be a list of points");
  for (const auto& p : d) domain.push_back(assignment_from_json(p));
  std::vector<std::vector<bool>> rows;
  const auto& r = field(j, "rows");
  if (!r.is_array()) throw ValidationError("\"rows\" must be a list of truth rows");
  for (const auto& row : r) {
    if (!row.is_array()) throw ValidationError("each row must be a list");
    std::vector<bool> bits;
    for (const auto& b : row) bits.push_back(bit_from_json(b));
    rows.push_back(std::move(bits));
  }
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    if (!it->is_array()) throw ValidationError("\"names\" must be a list of strings");
    for (const auto& n : *it) {
      if (!n.is_string()) throw ValidationError("\"names\" must be a list of strings");
      names.push_back(n.get<std::string>());
    }
  }
  return std::make_shared<TableFamily>(std::move(domain), std::move(rows), std::move(names));
}

std::shared_ptr<const PredicateFamily> halfspace_from_json(const json& j) {
  reject_unknown_keys(j, {"kind", "d", "predicates"});
  const std::size_t d = positive_int(field(j, "d"), "\"d\"");
  const auto& preds = field(j, "predicates");
  if (!preds.is_array() || preds.empty()) throw ValidationError("\"predicates\" must be a non-empty list");
  std::vector<Halfspace> hs;
  for (const auto& row : preds) {
    if (!row.is_array() || row.size() != d + 1) {
      throw ValidationError("halfspace row must have d+1 = " + std::to_string(d + 1) + " entries, got " + row.dump());
    }
    Halfspace h;
    for (std::size_t i = 0; i < d; ++i) h.coeffs.push_back(rational_from_json(row[i]));
    h.threshold = rational_from_json(row[d]);
    hs.push_back(std::move(h));
  }
  return std::make_shared<HalfspaceFamily>(d, std::move(hs));
}

std::shared_ptr<const PredicateFamily> ineq_from_json(const json& j) {
  reject_unknown_keys(j, {"kind", "n", "pairs", "strict"});
  const std::size_t n = positive_int(field(j, "n"), "\"n\"");
  const auto& ps = field(j, "pairs");
  if (!ps.is_array() || ps.empty()) throw ValidationError("\"pairs\" must be a non-empty list");
  std::vector<VarPair> pairs;
  for (const auto& p : ps) pairs.push_back(pair_from_json(p));
  bool strict = true;
  if (auto it = j.find("strict"); it != j.end()) {
    if (!it->is_boolean()) throw ValidationError("\"strict\" must be a boolean");
    strict = it->get<bool>();
  }
  return std::make_shared<IneqFamily>(n, std::move(pairs), strict);
}

}  // namespace

std::shared_ptr<const PredicateFamily> family_from_json(const json& j) {
  require_object(j, "family");
  const auto& kind = field(j, "kind");
  if (!kind.is_string()) throw ValidationError("\"kind\" must be a string");
  const auto k = kind.get<std::string>();
  if (k == "table") return table_from_json(j);
  if (k == "halfspace") return halfspace_from_json(j);
  if (k == "var_ineq") return ineq_from_json(j);
  throw ValidationError("unknown family kind \"" + k + "\"");
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::shared_ptr<const PredicateFamily> load_family(const std::string& path) {
  return family_from_json(parse_json_file(path));
}

json family_to_json(const PredicateFamily& family) {
  if (const auto* t = dynamic_cast<const TableFamily*>(&family)) {
    json domain = json::array();
    for (const auto& p : t->domain()) domain.push_back(assignment_to_json(p));
    json rows = json::array();
    for (const auto& row : t->rows()) {
      json r = json::array();
      for (bool b : row) r.push_back(b ? 1 : 0);
      rows.push_back(std::move(r));
    }
    json out{{"kind", "table"}, {"domain", std::move(domain)}, {"rows", std::move(rows)}};
    if (!t->names().empty()) out["names"] = t->names();
    return out;
  }
  if (const auto* h = dynamic_cast<const HalfspaceFamily*>(&family)) {
    json preds = json::array();
    for (const auto& hs : h->halfspaces()) {
      json row = json::array();
      for (const auto& c : hs.coeffs) row.push_back(to_string(c));
      row.push_back(to_string(hs.threshold));
      preds.push_back(std::move(row));
    }
    return json{{"kind", "halfspace"}, {"d", h->domain_dim()}, {"predicates", std::move(preds)}};
  }
  if (const auto* q = dynamic_cast<const IneqFamily*>(&family)) {
    json pairs = json::array();
    for (const auto& p : q->pairs()) pairs.push_back(json::array({p.from, p.to}));
    return json{{"kind", "var_ineq"}, {"n", q->n()}, {"pairs", std::move(pairs)}, {"strict", q->strict()}};
  }
  throw ValidationError("family kind has no file format");
}

PredicateSet target_from_json(const json& j, const PredicateFamily& family) {
  require_object(j, "target");
  reject_unknown_keys(j, {"members", "pairs"});
  const bool has_members = j.contains("members");
  const bool has_pairs = j.contains("pairs");
  if (has_members == has_pairs) throw ValidationError("target needs exactly one of \"members\" or \"pairs\"");
  PredicateSet s;
  if (has_members) {
    s = set_from_json(j["members"]);
  } else {
    const auto* q = dynamic_cast<const IneqFamily*>(&family);
    if (!q) throw ValidationError("\"pairs\" targets need a var_ineq family");
    const auto& ps = j["pairs"];
    if (!ps.is_array()) throw ValidationError("\"pairs\" must be a list");
    std::vector<VarPair> pairs;
    for (const auto& p : ps) pairs.push_back(pair_from_json(p));
    s = q->set_of(pairs);
  }
  family.check_set(s);
  return s;
}

PredicateSet load_target(const std::string& path, const PredicateFamily& family) {
  return target_from_json(parse_json_file(path), family);
}

json assignment_to_json(const Assignment& a) {
  json out = json::array();
  for (const auto& v : a.values()) out.push_back(to_string(v));
  return out;
}

Assignment assignment_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("assignment must be a list, got " + j.dump());
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from_json(v));
  return Assignment(std::move(values));
}

json set_to_json(const PredicateSet& s) { return json(s.members()); }

PredicateSet set_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("predicate set must be a list of indices");
  std::vector<PredicateIndex> members;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ValidationError("predicate index must be a non-negative integer, got " + v.dump());
    }
    members.push_back(v.get<PredicateIndex>());
  }
  std::set<PredicateIndex> uniq(members.begin(), members.end());
  if (uniq.size() != members.size()) throw ValidationError("predicate set lists an index twice");
  return PredicateSet::from_unsorted(std::move(members));
}

}  // namespace memlearn
