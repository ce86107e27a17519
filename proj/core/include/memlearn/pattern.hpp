#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "memlearn/ineq.hpp"
#include "memlearn/learner.hpp"

namespace memlearn {

// A seed or query chart: values at points 1..k, k >= 2.
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::size_t index) const { return values_.at(index - 1); }
  Assignment as_assignment() const { return Assignment(values_); }

 private:
  std::vector<Rational> values_;
};

// CSV with header "index,value" and one row per point, indices 1..k in order.
Chart parse_chart_csv(const std::string& text);
Chart load_chart(const std::string& path);
std::string chart_to_csv(const Chart& chart);
nlohmann::json chart_to_json(const Chart& chart);

// Non-strict family over k variables with every pair (i, j), i != j, where
// the seed has c(i) >= c(j), in lexicographic pair order.
std::shared_ptr<const IneqFamily> seed_family(const Chart& chart);

Chart witness_to_chart(const Assignment& a);

struct PatternProgram {
  std::size_t k = 0;
  std::shared_ptr<const IneqFamily> family;
  PredicateSet formula;
  std::string source_text;
};

// The DSL:
//   EXTREME <i> AS v<i>;          one line per point, i = 1..k
//   ALERT WHEN v<i> >= v<j> AND ...;   or  ALERT WHEN TRUE;
// Comparisons are listed in lexicographic (i, j) order.
std::string emit_dsl(const IneqFamily& family, const PredicateSet& formula);

struct Comparison {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool strict = false;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct ParsedProgram {
  std::size_t k = 0;
  std::vector<Comparison> conditions;  // empty for TRUE
};

ParsedProgram parse_dsl(const std::string& text);

// Runs the alert on a series: the last k points stand in for the k extreme
// points. Series shorter than k never alert.
bool interpret_dsl(const ParsedProgram& program, const std::vector<Rational>& series);

struct SynthesisResult {
  PatternProgram program;
  LearnResult run;
};

// Seeds the family from the chart, learns the conjunction with the teacher
// (asked on query charts as assignments), and emits the program.
SynthesisResult synthesize(const Chart& seed, Teacher& teacher);

// Machine-readable companion of an emitted program.
nlohmann::json sidecar_json(const SynthesisResult& result, const std::string& transcript_ref = {});

}  // namespace memlearn
