#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "memlearn/learner.hpp"

namespace memlearn {

// Newline-delimited JSON, one object per answered query:
//   {"seq":1,"assignment":["1","1"],"answer":0,"candidate_size_before":4,"candidate_size_after":2}
nlohmann::json entry_to_json(const TranscriptEntry& e);
TranscriptEntry entry_from_json(const nlohmann::json& j);

void write_transcript(std::ostream& out, const std::vector<TranscriptEntry>& entries);
// Blank lines are skipped. Sequence numbers must run 1, 2, 3, ...
std::vector<TranscriptEntry> read_transcript(std::istream& in);

void save_transcript(const std::string& path, const std::vector<TranscriptEntry>& entries);
std::vector<TranscriptEntry> load_transcript(const std::string& path);

}  // namespace memlearn
