#include "memlearn/learner.hpp"

#include <algorithm>
#include <string>

#include "memlearn/errors.hpp"

namespace memlearn {

// --- Teachers ------------------------------------------------------------------------

SimulatedTeacher::SimulatedTeacher(std::shared_ptr<const PredicateFamily> family, PredicateSet target, Mode mode)
    : family_(std::move(family)), target_(std::move(target)), mode_(mode) {
  if (!family_) throw ValidationError("simulated teacher needs a family");
  family_->check_set(target_);
}

bool SimulatedTeacher::answer(const Assignment& a) {
  ++asked_;
  return family_->evaluate_set(target_, a, mode_);
}

ScriptedTeacher::ScriptedTeacher(std::vector<TranscriptEntry> entries) {
  for (auto& e : entries) {
    expected_.emplace_back(std::move(e.assignment));
    answers_.push_back(e.answer);
  }
}

ScriptedTeacher::ScriptedTeacher(std::vector<bool> bits) : expected_(bits.size()), answers_(std::move(bits)) {}

bool ScriptedTeacher::answer(const Assignment& a) {
  if (next_ >= answers_.size()) {
    throw TeacherError("script exhausted after " + std::to_string(answers_.size()) + " answers; asked " + to_string(a));
  }
  const auto& want = expected_[next_];
  if (want && !(*want == a)) {
    throw TeacherError("script diverged at query " + std::to_string(next_ + 1) + ": expected " + to_string(*want) +
                       ", asked " + to_string(a));
  }
  return answers_[next_++];
}

// --- Eliminated sets -------------------------------------------------------------------

EliminatedStore::EliminatedStore(std::size_t family_size) : use_masks_(family_size <= 64) {}

std::uint64_t EliminatedStore::mask_of(const PredicateSet& s) {
  std::uint64_t m = 0;
  for (auto f : s) m |= std::uint64_t{1} << f;
  return m;
}

void EliminatedStore::add(const PredicateSet& s) {
  if (use_masks_) masks_.push_back(mask_of(s));
  sets_.push_back(s);
}

bool EliminatedStore::covers(const PredicateSet& d) const {
  if (use_masks_) {
    const std::uint64_t m = mask_of(d);
    return std::any_of(masks_.begin(), masks_.end(), [m](std::uint64_t r) { return (m & ~r) == 0; });
  }
  return std::any_of(sets_.begin(), sets_.end(), [&d](const PredicateSet& r) { return d.is_subset_of(r); });
}

// --- Session ---------------------------------------------------------------------------

std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::Running: return "running";
    case SessionStatus::Done: return "done";
    case SessionStatus::Failed: return "failed";
  }
  return "unknown";
}

LearnSession::LearnSession(std::shared_ptr<const Lattice> lattice)
    : lattice_(std::move(lattice)),
      eliminated_(lattice_ ? lattice_->family().size() : 0) {
  if (!lattice_) throw ValidationError("session needs a lattice");
  current_ = lattice_->top();
}

std::optional<Representative> LearnSession::result() const {
  if (status_ != SessionStatus::Done) return std::nullopt;
  return Representative{current_, mode()};
}

void LearnSession::start_round() {
  round_parent_ = current_;
  round_descendants_ = lattice_->immediate_descendants(round_parent_);
  max_descendants_ = std::max(max_descendants_, round_descendants_.size());
  round_pos_ = 0;
  flag_ = true;
  round_active_ = true;
  ++rounds_;
  // Each round before the last removes a member, so there are at most |F|+1.
  if (rounds_ > lattice_->family().size() + 1) throw InternalError("learning loop failed to shrink the candidate");
}

StepResult LearnSession::step() {
  if (status_ == SessionStatus::Done) return Done{Representative{current_, mode()}};
  if (status_ == SessionStatus::Failed) throw StateError("session failed: " + failure_);
  if (pending_) return *pending_;

  for (;;) {
    if (!round_active_) start_round();
    if (round_pos_ == round_descendants_.size()) {
      round_active_ = false;
      if (flag_) {
        finish();
        return Done{Representative{current_, mode()}};
      }
      continue;
    }
    const PredicateSet& d = round_descendants_[round_pos_];
    if (eliminated_.covers(d)) {
      ++round_pos_;
      continue;
    }
    // Witnesses separate the round's parent, not the shrinking candidate.
    Assignment a = lattice_->witness(round_parent_, d);
    if (auto it = cache_.find(a); it != cache_.end()) {
      ++cache_hits_;
      apply(it->second);
      continue;
    }
    pending_ = NextQuery{transcript_.size() + 1, std::move(a)};
    return *pending_;
  }
}

void LearnSession::apply(bool bit) {
  const bool normalized = bit != (mode() == Mode::And);
  const PredicateSet& d = round_descendants_[round_pos_];
  if (!normalized) {
    current_ = current_.intersect(d);
    flag_ = false;
  } else {
    eliminated_.add(d);
  }
  ++round_pos_;
}

void LearnSession::submit_answer(bool bit) {
  if (status_ != SessionStatus::Running) throw StateError("session is " + std::string(to_string(status_)));
  if (!pending_) throw StateError("no pending query to answer");
  TranscriptEntry entry;
  entry.seq = pending_->seq;
  entry.assignment = pending_->assignment;
  entry.answer = bit;
  entry.candidate_size_before = current_.size();
  cache_.emplace(entry.assignment, bit);
  apply(bit);
  entry.candidate_size_after = current_.size();
  transcript_.push_back(std::move(entry));
  pending_.reset();
}

void LearnSession::confirm_answer(std::size_t seq, bool bit) const {
  if (seq < 1 || seq > transcript_.size()) throw StateError("no recorded query with seq " + std::to_string(seq));
  const auto& e = transcript_[seq - 1];
  if (e.answer != bit) {
    throw TeacherError("inconsistent answer for query " + std::to_string(seq) + " at " + to_string(e.assignment) +
                       ": recorded " + std::to_string(e.answer) + ", now " + std::to_string(bit));
  }
}

void LearnSession::finish() {
  for (const auto& e : transcript_) {
    if (lattice_->holds(current_, e.assignment) != e.answer) {
      status_ = SessionStatus::Failed;
      failure_ = "target not in class: learned " + to_string(current_) + " disagrees with answer " +
                 std::to_string(e.answer) + " at " + to_string(e.assignment) + " (query " + std::to_string(e.seq) +
                 ")";
      throw TargetOutsideClass(failure_);
    }
  }
  status_ = SessionStatus::Done;
}

// --- Blocking driver ----------------------------------------------------------------

LearnResult learn(std::shared_ptr<const Lattice> lattice, Teacher& teacher) {
  LearnSession session(std::move(lattice));
  for (;;) {
    auto r = session.step();
    if (auto* done = std::get_if<Done>(&r)) {
      LearnResult out;
      out.result = done->result;
      out.transcript = session.transcript();
      out.queries = session.query_count();
      out.cache_hits = session.cache_hits();
      out.rounds = session.rounds();
      out.max_descendants = session.max_descendants();
      return out;
    }
    session.submit_answer(teacher.answer(std::get<NextQuery>(r).assignment));
  }
}

LearnResult learn(std::shared_ptr<const PredicateFamily> family, Teacher& teacher, Mode mode) {
  return learn(make_lattice(std::move(family), mode), teacher);
}

// --- Bounds ----------------------------------------------------------------------------

std::size_t ceil_log2(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

BoundReport make_bound_report(const LearnResult& run, const Lattice& lattice, const HasseDiagram* diagram,
                              std::optional<std::size_t> opt) {
  BoundReport r;
  r.queries_used = run.queries;
  std::size_t widest = run.max_descendants;
  if (diagram) {
    r.lattice_size = diagram->nodes.size();
    r.max_descendants_exact = diagram->max_out_degree();
    widest = std::max(widest, *r.max_descendants_exact);
    r.bound_lower_info = std::max(ceil_log2(diagram->nodes.size()), *r.max_descendants_exact);
  }
  r.bound_upper = lattice.family().size() * widest;
  r.opt_exact = opt;
  return r;
}

}  // namespace memlearn
