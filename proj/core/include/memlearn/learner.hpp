#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "memlearn/lattice.hpp"
#include "memlearn/predicate.hpp"

namespace memlearn {

// One answered membership query. seq counts from 1; sizes are |S| around the
// update the answer caused.
struct TranscriptEntry {
  std::size_t seq = 0;
  Assignment assignment;
  bool answer = false;
  std::size_t candidate_size_before = 0;
  std::size_t candidate_size_after = 0;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Answers membership queries for some hidden target.
class Teacher {
 public:
  virtual ~Teacher() = default;
  virtual bool answer(const Assignment& a) = 0;
};

// Knows its target as a predicate set and evaluates it.
class SimulatedTeacher final : public Teacher {
 public:
  SimulatedTeacher(std::shared_ptr<const PredicateFamily> family, PredicateSet target, Mode mode);
  bool answer(const Assignment& a) override;

  const PredicateSet& target() const { return target_; }
  Mode mode() const { return mode_; }
  std::size_t asked() const { return asked_; }

 private:
  std::shared_ptr<const PredicateFamily> family_;
  PredicateSet target_;
  Mode mode_;
  std::size_t asked_ = 0;
};

// Wraps an arbitrary function, for targets outside any family.
class FunctionTeacher final : public Teacher {
 public:
  explicit FunctionTeacher(std::function<bool(const Assignment&)> fn) : fn_(std::move(fn)) {}
  bool answer(const Assignment& a) override { return fn_(a); }

 private:
  std::function<bool(const Assignment&)> fn_;
};

// Replays answers in order. With full entries, each asked assignment must
// match the recorded one; a mismatch or running out raises TeacherError.
class ScriptedTeacher final : public Teacher {
 public:
  explicit ScriptedTeacher(std::vector<TranscriptEntry> entries);
  explicit ScriptedTeacher(std::vector<bool> bits);
  bool answer(const Assignment& a) override;

  std::size_t consumed() const { return next_; }
  std::size_t remaining() const { return answers_.size() - next_; }

 private:
  std::vector<std::optional<Assignment>> expected_;
  std::vector<bool> answers_;
  std::size_t next_ = 0;
};

// The eliminated sets T with a "some R in T contains d" query.
class EliminatedStore {
 public:
  explicit EliminatedStore(std::size_t family_size);

  void add(const PredicateSet& s);
  bool covers(const PredicateSet& d) const;
  std::size_t size() const { return sets_.size(); }
  const std::vector<PredicateSet>& sets() const { return sets_; }

 private:
  static std::uint64_t mask_of(const PredicateSet& s);

  bool use_masks_;
  std::vector<std::uint64_t> masks_;
  std::vector<PredicateSet> sets_;
};

struct NextQuery {
  std::size_t seq = 0;
  Assignment assignment;
};

struct Done {
  Representative result;
};

using StepResult = std::variant<NextQuery, Done>;

enum class SessionStatus { Running, Done, Failed };

std::string_view to_string(SessionStatus status);

// The learning loop as a resumable state machine. Each round enumerates the
// immediate descendants of the current candidate, skips those contained in
// an eliminated set, and asks one witness for each of the rest: a normalized
// 0 intersects the candidate with the descendant, a 1 eliminates it. A round
// without a 0 ends the run. In And mode the answer is negated first.
//
// Answers are cached by assignment; a repeated witness is resolved from the
// cache and is neither counted nor recorded again.
class LearnSession {
 public:
  explicit LearnSession(std::shared_ptr<const Lattice> lattice);

  // Next pending query, or the result. Idempotent while a query is pending.
  StepResult step();
  // Answers the pending query. StateError if nothing is pending.
  void submit_answer(bool bit);
  // Re-answers an already recorded query. Matching bits are a no-op;
  // a different bit raises TeacherError.
  void confirm_answer(std::size_t seq, bool bit) const;

  SessionStatus status() const { return status_; }
  const std::optional<NextQuery>& pending() const { return pending_; }
  std::optional<Representative> result() const;
  const std::string& failure() const { return failure_; }

  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  Mode mode() const { return lattice_->mode(); }
  const PredicateSet& current() const { return current_; }
  const EliminatedStore& eliminated() const { return eliminated_; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  std::size_t query_count() const { return transcript_.size(); }
  std::size_t cache_hits() const { return cache_hits_; }
  std::size_t rounds() const { return rounds_; }
  std::size_t max_descendants() const { return max_descendants_; }

 private:
  void start_round();
  void apply(bool bit);
  void finish();

  std::shared_ptr<const Lattice> lattice_;
  SessionStatus status_ = SessionStatus::Running;
  std::string failure_;

  PredicateSet current_;
  EliminatedStore eliminated_;
  PredicateSet round_parent_;
  std::vector<PredicateSet> round_descendants_;
  std::size_t round_pos_ = 0;
  bool round_active_ = false;
  bool flag_ = true;

  std::optional<NextQuery> pending_;
  std::map<Assignment, bool> cache_;
  std::vector<TranscriptEntry> transcript_;
  std::size_t cache_hits_ = 0;
  std::size_t rounds_ = 0;
  std::size_t max_descendants_ = 0;
};

struct LearnResult {
  Representative result;
  std::vector<TranscriptEntry> transcript;
  std::size_t queries = 0;
  std::size_t cache_hits = 0;
  std::size_t rounds = 0;
  std::size_t max_descendants = 0;
};

// Drives a session against a blocking teacher.
LearnResult learn(std::shared_ptr<const Lattice> lattice, Teacher& teacher);
LearnResult learn(std::shared_ptr<const PredicateFamily> family, Teacher& teacher, Mode mode);

struct BoundReport {
  std::size_t queries_used = 0;
  // |F| times the largest descendant count seen (or known, when the lattice
  // is materialized).
  std::size_t bound_upper = 0;
  std::optional<std::size_t> lattice_size;
  std::optional<std::size_t> max_descendants_exact;
  // max(ceil(log2 |lattice|), max descendants); needs the lattice.
  std::optional<std::size_t> bound_lower_info;
  std::optional<std::size_t> opt_exact;

  bool within_upper() const { return queries_used <= bound_upper; }
};

BoundReport make_bound_report(const LearnResult& run, const Lattice& lattice, const HasseDiagram* diagram = nullptr,
                              std::optional<std::size_t> opt = std::nullopt);

std::size_t ceil_log2(std::size_t n);

}  // namespace memlearn
