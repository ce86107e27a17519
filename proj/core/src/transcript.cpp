#include "memlearn/transcript.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"

namespace memlearn {

using nlohmann::json;

json entry_to_json(const TranscriptEntry& e) {
  return json{{"seq", e.seq},
              {"assignment", assignment_to_json(e.assignment)},
              {"answer", e.answer ? 1 : 0},
              {"candidate_size_before", e.candidate_size_before},
              {"candidate_size_after", e.candidate_size_after}};
}

TranscriptEntry entry_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("transcript record must be an object");
  try {
    TranscriptEntry e;
    e.seq = j.at("seq").get<std::size_t>();
    e.assignment = assignment_from_json(j.at("assignment"));
    const auto& a = j.at("answer");
    if (a.is_boolean()) {
      e.answer = a.get<bool>();
    } else {
      const auto v = a.get<int>();
      if (v != 0 && v != 1) throw ValidationError("answer must be 0 or 1");
      e.answer = v == 1;
    }
    e.candidate_size_before = j.value("candidate_size_before", std::size_t{0});
    e.candidate_size_after = j.value("candidate_size_after", std::size_t{0});
    return e;
  } catch (const json::exception& ex) {
    throw ValidationError(std::string("bad transcript record: ") + ex.what());
  }
}

void write_transcript(std::ostream& out, const std::vector<TranscriptEntry>& entries) {
  for (const auto& e : entries) out << entry_to_json(e).dump() << '\n';
}

std::vector<TranscriptEntry> read_transcript(std::istream& in) {
  std::vector<TranscriptEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("transcript line " + std::to_string(lineno) + ": " + e.what());
    }
    auto e = entry_from_json(j);
    if (e.seq != out.size() + 1) {
      throw ValidationError("transcript line " + std::to_string(lineno) + ": expected seq " +
                            std::to_string(out.size() + 1) + ", got " + std::to_string(e.seq));
    }
    out.push_back(std::move(e));
  }
  return out;
}

void save_transcript(const std::string& path, const std::vector<TranscriptEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  write_transcript(out, entries);
}

std::vector<TranscriptEntry> load_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return read_transcript(in);
}

}  // namespace memlearn
