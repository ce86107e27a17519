#include "common.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/transcript.hpp"

namespace memlearn::cli {

int& exit_status() {
  static int status = kOk;
  return status;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const TeacherError& e) {
    std::cerr << "teacher error: " << e.what() << '\n';
    return kTeacher;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}

namespace {

bool parse_yes_no(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "1" || s == "y" || s == "yes") return true;
  if (s == "0" || s == "n" || s == "no") return false;
  throw ValidationError("answer with y/n or 1/0, got \"" + s + "\"");
}

// Asks on the terminal. Assignments print as an aligned table; pattern
// queries add a sparkline.
class PromptTeacher final : public Teacher {
 public:
  PromptTeacher(std::shared_ptr<const PredicateFamily> family, bool pattern)
      : family_(std::move(family)), pattern_(pattern) {}

  bool answer(const Assignment& a) override {
    ++asked_;
    std::vector<std::string> heads, cells;
    for (std::size_t i = 0; i < a.size(); ++i) {
      heads.push_back((pattern_ ? "p" : "x") + std::to_string(i + 1));
      cells.push_back(to_decimal_string(a[i]));
    }
    std::ostringstream top, bottom;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto w = std::max(heads[i].size(), cells[i].size());
      top << ' ' << std::string(w - heads[i].size(), ' ') << heads[i];
      bottom << ' ' << std::string(w - cells[i].size(), ' ') << cells[i];
    }
    std::cout << "query " << asked_ << ":\n " << top.str() << "\n " << bottom.str() << '\n';
    if (pattern_) std::cout << "  chart: " << sparkline(a) << '\n';
    for (;;) {
      std::cout << (pattern_ ? "is this your pattern? [y/n] " : "target value here? [y/n] ") << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) throw TeacherError("input closed before the query was answered");
      try {
        return parse_yes_no(line);
      } catch (const ValidationError& e) {
        std::cout << e.what() << '\n';
      }
    }
  }

 private:
  std::shared_ptr<const PredicateFamily> family_;
  bool pattern_;
  std::size_t asked_ = 0;
};

}  // namespace

std::vector<TranscriptEntry> load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    std::istringstream is(text);
    return read_transcript(is);
  }
  std::vector<TranscriptEntry> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    TranscriptEntry e;
    e.seq = out.size() + 1;
    e.answer = parse_yes_no(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
    out.push_back(std::move(e));
  }
  return out;
}

std::unique_ptr<Teacher> make_teacher(const std::string& spec, std::shared_ptr<const PredicateFamily> family,
                                      Mode mode, bool pattern_mode) {
  if (spec == "prompt") return std::make_unique<PromptTeacher>(std::move(family), pattern_mode);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ValidationError("teacher must be simulated:<file>, scripted:<file> or prompt");
  const auto kind = spec.substr(0, colon);
  const auto path = spec.substr(colon + 1);
  if (kind == "simulated") {
    auto target = load_target(path, *family);
    return std::make_unique<SimulatedTeacher>(std::move(family), std::move(target), mode);
  }
  if (kind == "scripted") {
    auto entries = load_script(path);
    // Plain answer lists carry no assignments and are replayed blind.
    const bool blind = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.assignment.size() == 0; });
    if (blind) {
      std::vector<bool> bits;
      for (const auto& e : entries) bits.push_back(e.answer);
      return std::make_unique<ScriptedTeacher>(std::move(bits));
    }
    return std::make_unique<ScriptedTeacher>(std::move(entries));
  }
  throw ValidationError("unknown teacher kind \"" + kind + "\"");
}

nlohmann::json representative_json(const Representative& rep, const PredicateFamily& family) {
  nlohmann::json names = nlohmann::json::array();
  for (auto f : rep.set) names.push_back(family.predicate_name(f));
  return {{"members", set_to_json(rep.set)}, {"names", std::move(names)}, {"mode", to_string(rep.mode)}};
}

std::string names_of(const PredicateSet& s, const PredicateFamily& family, Mode mode) {
  if (s.empty()) return mode == Mode::Or ? "FALSE" : "TRUE";
  std::string out;
  for (auto f : s) {
    if (!out.empty()) out += mode == Mode::Or ? " | " : " & ";
    out += family.predicate_name(f);
  }
  return out;
}

std::string sparkline(const Assignment& a) {
  static const char* blocks[] = {"▁", "▂", "▃", "▄", "▅", "▆", "▇", "█"};
  if (a.size() == 0) return {};
  Rational lo = a[0], hi = a[0];
  for (const auto& v : a.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::string out;
  for (const auto& v : a.values()) {
    std::size_t level = 0;
    if (hi > lo) {
      const Rational scaled = (v - lo) * 7 / (hi - lo);
      level = static_cast<std::size_t>(boost::multiprecision::numerator(scaled) /
                                       boost::multiprecision::denominator(scaled));
    }
    out += blocks[level];
  }
  return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace memlearn::cli
