#include "memlearn/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"

namespace memlearn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Chart::Chart(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw ValidationError("a chart needs at least 2 points");
}

Chart parse_chart_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ValidationError("chart CSV is empty");
  std::string header = lines.front();
  header.erase(std::remove(header.begin(), header.end(), ' '), header.end());
  if (header != "index,value") throw ValidationError("chart CSV header must be \"index,value\", got \"" + lines[0] + "\"");
  std::vector<Rational> values;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto comma = lines[r].find(',');
    if (comma == std::string::npos || lines[r].find(',', comma + 1) != std::string::npos) {
      throw ValidationError("chart CSV row " + std::to_string(r) + " must have two fields");
    }
    const auto idx = trim(lines[r].substr(0, comma));
    if (idx != std::to_string(r)) {
      throw ValidationError("chart CSV row " + std::to_string(r) + " has index \"" + idx + "\", expected " +
                            std::to_string(r));
    }
    values.push_back(parse_rational(trim(lines[r].substr(comma + 1))));
  }
  return Chart(std::move(values));
}

Chart load_chart(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_chart_csv(ss.str());
}

std::string chart_to_csv(const Chart& chart) {
  std::string out = "index,value\n";
  for (std::size_t i = 1; i <= chart.size(); ++i) out += std::to_string(i) + "," + to_decimal_string(chart.at(i)) + "\n";
  return out;
}

nlohmann::json chart_to_json(const Chart& chart) {
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 1; i <= chart.size(); ++i) {
    points.push_back({{"index", i}, {"value", to_decimal_string(chart.at(i))}});
  }
  return points;
}

std::shared_ptr<const IneqFamily> seed_family(const Chart& chart) {
  const std::size_t k = chart.size();
  std::vector<VarPair> pairs;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      if (i != j && chart.at(i) >= chart.at(j)) pairs.push_back({i, j});
    }
  }
  return std::make_shared<IneqFamily>(k, std::move(pairs), false);
}

Chart witness_to_chart(const Assignment& a) { return Chart(a.values()); }

std::string emit_dsl(const IneqFamily& family, const PredicateSet& formula) {
  auto pairs = family.pairs_of(formula);
  std::sort(pairs.begin(), pairs.end());
  const char* op = family.strict() ? " > " : " >= ";
  std::string out;
  for (std::size_t i = 1; i <= family.n(); ++i) {
    out += "EXTREME " + std::to_string(i) + " AS v" + std::to_string(i) + ";\n";
  }
  out += "ALERT WHEN ";
  if (pairs.empty()) out += "TRUE";
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    if (c) out += " AND ";
    out += "v" + std::to_string(pairs[c].from) + op + "v" + std::to_string(pairs[c].to);
  }
  out += ";\n";
  return out;
}

ParsedProgram parse_dsl(const std::string& text) {
  static const std::regex extreme(R"(EXTREME\s+(\d+)\s+AS\s+v(\d+))");
  static const std::regex alert(R"(ALERT\s+WHEN\s+(.+))");
  static const std::regex cmp(R"(v(\d+)\s*(>=|>)\s*v(\d+))");
  static const std::regex conj(R"(\s+AND\s+)");

  ParsedProgram p;
  bool seen_alert = false;
  std::istringstream in(text);
  std::string stmt;
  while (std::getline(in, stmt, ';')) {
    stmt = trim(stmt);
    if (stmt.empty()) continue;
    if (seen_alert) throw ValidationError("statement after ALERT: \"" + stmt + "\"");
    std::smatch m;
    if (std::regex_match(stmt, m, extreme)) {
      const auto i = std::stoul(m[1]);
      if (i != p.k + 1 || std::stoul(m[2]) != i) {
        throw ValidationError("EXTREME statements must bind v1, v2, ... in order; got \"" + stmt + "\"");
      }
      ++p.k;
    } else if (std::regex_match(stmt, m, alert)) {
      seen_alert = true;
      const std::string cond = trim(m[1]);
      if (cond == "TRUE") continue;
      std::sregex_token_iterator it(cond.begin(), cond.end(), conj, -1), end;
      for (; it != end; ++it) {
        const std::string term = trim(*it);
        std::smatch t;
        if (!std::regex_match(term, t, cmp)) throw ValidationError("bad comparison \"" + term + "\"");
        Comparison c{std::stoul(t[1]), std::stoul(t[3]), t[2] == ">"};
        if (c.lhs < 1 || c.lhs > p.k || c.rhs < 1 || c.rhs > p.k || c.lhs == c.rhs) {
          throw ValidationError("comparison \"" + term + "\" refers to an unbound or identical point");
        }
        p.conditions.push_back(c);
      }
    } else {
      throw ValidationError("unrecognized statement \"" + stmt + "\"");
    }
  }
  if (!seen_alert) throw ValidationError("program has no ALERT statement");
  if (p.k < 2) throw ValidationError("program binds fewer than 2 points");
  return p;
}

bool interpret_dsl(const ParsedProgram& program, const std::vector<Rational>& series) {
  if (series.size() < program.k) return false;
  const std::size_t base = series.size() - program.k;
  for (const auto& c : program.conditions) {
    const auto& l = series[base + c.lhs - 1];
    const auto& r = series[base + c.rhs - 1];
    if (c.strict ? !(l > r) : !(l >= r)) return false;
  }
  return true;
}

SynthesisResult synthesize(const Chart& seed, Teacher& teacher) {
  auto family = seed_family(seed);
  SynthesisResult out;
  out.run = learn(make_lattice(family, Mode::And), teacher);
  out.program.k = seed.size();
  out.program.family = family;
  out.program.formula = out.run.result.set;
  out.program.source_text = emit_dsl(*family, out.program.formula);
  return out;
}

nlohmann::json sidecar_json(const SynthesisResult& result, const std::string& transcript_ref) {
  const auto& fam = *result.program.family;
  nlohmann::json seeded = nlohmann::json::array();
  for (const auto& p : fam.pairs()) seeded.push_back({p.from, p.to});
  auto learned = fam.pairs_of(result.program.formula);
  std::sort(learned.begin(), learned.end());
  nlohmann::json formula = nlohmann::json::array();
  for (const auto& p : learned) formula.push_back({p.from, p.to});
  nlohmann::json out{{"k", result.program.k},
                     {"strict", fam.strict()},
                     {"family_pairs", std::move(seeded)},
                     {"formula_pairs", std::move(formula)},
                     {"formula_members", set_to_json(result.program.formula)},
                     {"queries", result.run.queries},
                     {"query_bound", result.program.k * result.program.k}};
  if (!transcript_ref.empty()) out["transcript"] = transcript_ref;
  return out;
}

}  // namespace memlearn
