#include "memlearn/service.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "memlearn/errors.hpp"
#include "memlearn/family_io.hpp"
#include "memlearn/ineq.hpp"
#include "memlearn/transcript.hpp"

namespace memlearn {

using nlohmann::json;

struct SessionService::Record {
  std::string id;
  std::string kind;
  std::string created;
  std::string updated;
  json payload;
  std::shared_ptr<const PredicateFamily> family;
  std::optional<Chart> chart;
  std::optional<std::size_t> bound;
  std::unique_ptr<LearnSession> session;
  // Idempotency keys: the bit each key carried and the reply it produced.
  std::map<std::string, std::pair<bool, ServiceResponse>> keys;
  std::mutex mutex;
};

namespace {

std::string now_iso() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, json{{"error", message}, {"code", code}}};
}

// Maps library errors onto status codes.
template <typename Fn>
ServiceResponse guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const TargetOutsideClass& e) {
    return error_response(422, "target_outside_class", e.what());
  } catch (const TeacherError& e) {
    return error_response(409, "teacher", e.what());
  } catch (const StateError& e) {
    return error_response(409, "state", e.what());
  } catch (const ValidationError& e) {
    return error_response(400, "validation", e.what());
  } catch (const GuardExceeded& e) {
    return error_response(422, "guard", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "validation", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

bool bit_of(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v == 0 || v == 1) return v == 1;
  }
  throw ValidationError("answer must be 0 or 1, got " + j.dump());
}

}  // namespace

SessionService::SessionService(ServiceConfig config) : config_(std::move(config)) {
  std::random_device rd;
  id_state_ = (std::uint64_t{rd()} << 32) ^ rd();
  if (!config_.data_dir.empty()) {
    std::filesystem::create_directories(config_.data_dir / "sessions");
    replay();
  }
}

SessionService::~SessionService() = default;

std::string SessionService::fresh_id() {
  std::lock_guard lock(id_mutex_);
  std::mt19937_64 rng(id_state_);
  id_state_ = rng();
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << id_state_;
  return os.str();
}

std::shared_ptr<SessionService::Record> SessionService::build(const std::string& id, const json& payload,
                                                               const std::string& created) const {
  if (!payload.is_object()) throw ValidationError("session payload must be a JSON object");
  auto r = std::make_shared<Record>();
  r->id = id;
  r->created = created;
  r->updated = created;
  r->payload = payload;
  const auto kind_it = payload.find("kind");
  if (kind_it == payload.end() || !kind_it->is_string()) throw ValidationError("payload needs a string \"kind\"");
  r->kind = kind_it->get<std::string>();

  std::shared_ptr<const Lattice> lattice;
  if (r->kind == "pattern") {
    if (auto it = payload.find("chart_csv"); it != payload.end()) {
      if (!it->is_string()) throw ValidationError("\"chart_csv\" must be a string");
      r->chart = parse_chart_csv(it->get<std::string>());
    } else if (auto jt = payload.find("chart"); jt != payload.end()) {
      r->chart = Chart(assignment_from_json(*jt).values());
    } else {
      throw ValidationError("pattern payload needs \"chart_csv\" or \"chart\"");
    }
    auto fam = seed_family(*r->chart);
    r->family = fam;
    r->bound = r->chart->size() * r->chart->size();
    lattice = make_lattice(fam, Mode::And);
  } else if (r->kind == "family-or" || r->kind == "family-and") {
    const auto it = payload.find("family");
    if (it == payload.end()) throw ValidationError("family payload needs \"family\"");
    r->family = family_from_json(*it);
    const Mode mode = r->kind == "family-or" ? Mode::Or : Mode::And;
    if (const auto* q = dynamic_cast<const IneqFamily*>(r->family.get());
        q && mode == Mode::And && q->strict() && q->acyclic()) {
      r->bound = q->size();
    }
    lattice = make_lattice(r->family, mode);
  } else {
    throw ValidationError("unknown session kind \"" + r->kind + "\"");
  }
  r->session = std::make_unique<LearnSession>(lattice);
  r->session->step();
  return r;
}

void SessionService::append_log(const std::string& id, const json& line) const {
  if (config_.data_dir.empty()) return;
  std::ofstream out(config_.data_dir / "sessions" / (id + ".ndjson"), std::ios::app);
  out << line.dump() << '\n';
  out.flush();
  if (!out) throw Error("cannot persist session " + id);
}

ServiceResponse SessionService::create(const json& payload) {
  return guarded([&]() -> ServiceResponse {
    const std::string id = fresh_id();
    const std::string created = now_iso();
    auto r = build(id, payload, created);
    {
      std::unique_lock lock(map_mutex_);
      if (sessions_.size() >= config_.session_cap) {
        return error_response(503, "capacity",
                              "session cap of " + std::to_string(config_.session_cap) + " reached");
      }
      sessions_.emplace(id, r);
    }
    if (!config_.data_dir.empty()) {
      append_log(id, json{{"type", "create"}, {"payload", payload}, {"created", created}});
      std::lock_guard lock(index_mutex_);
      std::ofstream index(config_.data_dir / "index.ndjson", std::ios::app);
      index << json{{"id", id}, {"kind", r->kind}, {"created", created}}.dump() << '\n';
    }
    std::lock_guard lock(r->mutex);
    auto out = advance(*r);
    if (out.status == 200) out.status = 201;
    return out;
  });
}

std::shared_ptr<SessionService::Record> SessionService::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json SessionService::progress(const Record& r) const {
  json p{{"queries", r.session->query_count()}};
  p["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  return p;
}

json SessionService::query_body(const Record& r) const {
  const auto& pending = *r.session->pending();
  json q{{"seq", pending.seq}, {"assignment", assignment_to_json(pending.assignment)}};
  if (r.chart) q["chart"] = chart_to_json(witness_to_chart(pending.assignment));
  return json{{"id", r.id}, {"kind", r.kind}, {"status", "running"}, {"query", std::move(q)},
              {"progress", progress(r)}};
}

json SessionService::result_body(const Record& r) const {
  const auto rep = *r.session->result();
  json names = json::array();
  for (auto f : rep.set) names.push_back(r.family->predicate_name(f));
  json out{{"id", r.id},
           {"kind", r.kind},
           {"status", "done"},
           {"result", {{"members", set_to_json(rep.set)}, {"names", std::move(names)}, {"mode", to_string(rep.mode)}}},
           {"progress", progress(r)}};
  if (r.chart) {
    const auto fam = std::dynamic_pointer_cast<const IneqFamily>(r.family);
    SynthesisResult sr;
    sr.program.k = r.chart->size();
    sr.program.family = fam;
    sr.program.formula = rep.set;
    sr.program.source_text = emit_dsl(*fam, rep.set);
    sr.run.result = rep;
    sr.run.queries = r.session->query_count();
    out["program"] = sr.program.source_text;
    out["sidecar"] = sidecar_json(sr);
  }
  return out;
}

ServiceResponse SessionService::advance(Record& r) {
  try {
    auto step = r.session->step();
    if (std::holds_alternative<NextQuery>(step)) return {200, query_body(r)};
    return {200, result_body(r)};
  } catch (const TargetOutsideClass& e) {
    return error_response(422, "target_outside_class", e.what());
  }
}

ServiceResponse SessionService::status(const std::string& id) {
  return guarded([&]() -> ServiceResponse {
    auto r = find(id);
    if (!r) return error_response(404, "not_found", "unknown session " + id);
    std::lock_guard lock(r->mutex);
    json out{{"id", r->id},
             {"kind", r->kind},
             {"status", to_string(r->session->status())},
             {"created", r->created},
             {"updated", r->updated},
             {"progress", progress(*r)}};
    if (r->chart) out["k"] = r->chart->size();
    if (r->session->status() == SessionStatus::Failed) out["failure"] = r->session->failure();
    return {200, out};
  });
}

ServiceResponse SessionService::query(const std::string& id) {
  return guarded([&]() -> ServiceResponse {
    auto r = find(id);
    if (!r) return error_response(404, "not_found", "unknown session " + id);
    std::lock_guard lock(r->mutex);
    switch (r->session->status()) {
      case SessionStatus::Done: return error_response(409, "state", "session " + id + " is done");
      case SessionStatus::Failed: return error_response(409, "state", r->session->failure());
      case SessionStatus::Running: break;
    }
    return {200, query_body(*r)};
  });
}

ServiceResponse SessionService::answer(const std::string& id, const json& body) {
  return guarded([&]() -> ServiceResponse {
    auto r = find(id);
    if (!r) return error_response(404, "not_found", "unknown session " + id);
    if (!body.is_object()) throw ValidationError("answer body must be a JSON object");
    if (!body.contains("answer")) throw ValidationError("answer body needs \"answer\"");
    const bool bit = bit_of(body["answer"]);
    const auto key_it = body.find("key");
    if (key_it == body.end() || !key_it->is_string() || key_it->get<std::string>().empty()) {
      throw ValidationError("answer body needs a non-empty idempotency \"key\"");
    }
    const std::string key = key_it->get<std::string>();
    std::optional<std::size_t> seq;
    if (auto it = body.find("seq"); it != body.end() && !it->is_null()) {
      if (!it->is_number_integer() || it->get<long long>() < 1) throw ValidationError("\"seq\" must be a positive integer");
      seq = it->get<std::size_t>();
    }

    std::lock_guard lock(r->mutex);
    if (auto k = r->keys.find(key); k != r->keys.end()) {
      if (k->second.first != bit) return error_response(409, "conflict", "idempotency key reused with a different answer");
      return k->second.second;
    }
    if (r->session->status() != SessionStatus::Running) {
      return error_response(409, "state", "session " + id + " is " + std::string(to_string(r->session->status())));
    }
    const auto& pending = r->session->pending();
    if (!pending) throw InternalError("running session without a pending query");
    if (seq && *seq != pending->seq) {
      if (*seq < pending->seq) r->session->confirm_answer(*seq, bit);
      return error_response(409, "conflict",
                            "answer for query " + std::to_string(*seq) + " but query " +
                                std::to_string(pending->seq) + " is pending");
    }
    const std::string at = now_iso();
    append_log(id, json{{"type", "answer"}, {"seq", pending->seq}, {"answer", bit ? 1 : 0}, {"key", key}, {"at", at}});
    r->session->submit_answer(bit);
    r->updated = at;
    auto out = advance(*r);
    r->keys.emplace(key, std::make_pair(bit, out));
    return out;
  });
}

ServiceResponse SessionService::result(const std::string& id) {
  return guarded([&]() -> ServiceResponse {
    auto r = find(id);
    if (!r) return error_response(404, "not_found", "unknown session " + id);
    std::lock_guard lock(r->mutex);
    switch (r->session->status()) {
      case SessionStatus::Running: return error_response(409, "state", "session " + id + " is still running");
      case SessionStatus::Failed: return error_response(422, "target_outside_class", r->session->failure());
      case SessionStatus::Done: break;
    }
    return {200, result_body(*r)};
  });
}

ServiceResponse SessionService::transcript(const std::string& id) {
  return guarded([&]() -> ServiceResponse {
    auto r = find(id);
    if (!r) return error_response(404, "not_found", "unknown session " + id);
    std::lock_guard lock(r->mutex);
    json entries = json::array();
    for (const auto& e : r->session->transcript()) entries.push_back(entry_to_json(e));
    return {200, json{{"id", r->id}, {"entries", std::move(entries)}}};
  });
}

ServiceResponse SessionService::health() const {
  return {200, json{{"status", "ok"}, {"sessions", session_count()}}};
}

std::size_t SessionService::session_count() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

void SessionService::replay() {
  std::ifstream index(config_.data_dir / "index.ndjson");
  std::string line;
  while (std::getline(index, line)) {
    if (line.empty()) continue;
    const auto entry = json::parse(line);
    const auto id = entry.at("id").get<std::string>();
    std::ifstream log(config_.data_dir / "sessions" / (id + ".ndjson"));
    if (!log) throw Error("session log missing for " + id);
    std::shared_ptr<Record> r;
    std::string rec;
    while (std::getline(log, rec)) {
      if (rec.empty()) continue;
      const auto j = json::parse(rec);
      const auto type = j.at("type").get<std::string>();
      if (type == "create") {
        r = build(id, j.at("payload"), j.at("created").get<std::string>());
      } else if (type == "answer") {
        if (!r) throw Error("session log for " + id + " answers before create");
        const auto& pending = r->session->pending();
        const auto seq = j.at("seq").get<std::size_t>();
        if (!pending || pending->seq != seq) throw Error("session log for " + id + " diverges at seq " + std::to_string(seq));
        const bool bit = j.at("answer").get<int>() == 1;
        r->session->submit_answer(bit);
        r->updated = j.value("at", r->updated);
        auto out = advance(*r);
        r->keys.emplace(j.at("key").get<std::string>(), std::make_pair(bit, out));
      }
    }
    if (r) sessions_.emplace(id, std::move(r));
  }
}

}  // namespace memlearn
