#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "memlearn/predicate.hpp"

namespace memlearn {

// Family files are JSON objects with a "kind" key:
//
//   {"kind": "table", "domain": [[1,1],[1,2]], "rows": [[1,1],[0,1]], "names": ["f", "g"]}
//   {"kind": "halfspace", "d": 2, "predicates": [["1", "0", "3/2"], [0, 1, "0.5"]]}
//   {"kind": "var_ineq", "n": 4, "pairs": [[1,2],[3,4]], "strict": true}
//
// Table rows hold 0/1 (or booleans), one per domain point. Halfspace rows are
// a1..ad followed by b, for [a.x >= b]; entries are integers or strings in
// "p/q" or decimal form. var_ineq pairs are 1-based; "strict" defaults to
// true. Unknown keys are rejected.
std::shared_ptr<const PredicateFamily> family_from_json(const nlohmann::json& j);
std::shared_ptr<const PredicateFamily> load_family(const std::string& path);
nlohmann::json family_to_json(const PredicateFamily& family);

// Targets: {"members": [0, 2]} for any family, or {"pairs": [[1,2]]} for a
// var_ineq family.
PredicateSet target_from_json(const nlohmann::json& j, const PredicateFamily& family);
PredicateSet load_target(const std::string& path, const PredicateFamily& family);

// Assignments serialize as arrays of canonical rational strings ("3/2", "2");
// numbers are accepted on input.
nlohmann::json assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const PredicateSet& s);
PredicateSet set_from_json(const nlohmann::json& j);

nlohmann::json parse_json_file(const std::string& path);

}  // namespace memlearn
