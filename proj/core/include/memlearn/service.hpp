#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "memlearn/learner.hpp"
#include "memlearn/pattern.hpp"

namespace memlearn {

struct ServiceConfig {
  // Empty means in-memory only.
  std::filesystem::path data_dir;
  std::size_t session_cap = 1000;
};

// HTTP-shaped reply: status code plus JSON body. Errors carry
// {"error": message, "code": category}.
struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

// Interactive learning sessions keyed by opaque ids. Every accepted answer
// is appended to the session's log before the reply is built; on start-up
// the logs are replayed, which restores each session's pending query.
//
// Create payloads (JSON):
//   {"kind": "pattern", "chart_csv": "index,value\n1,5\n..."}
//   {"kind": "pattern", "chart": [5, 3, 4]}
//   {"kind": "family-or" | "family-and", "family": {<family file>}}
// Answer body: {"answer": 0|1, "key": "<idempotency key>", "seq": <optional>}.
class SessionService {
 public:
  explicit SessionService(ServiceConfig config = {});
  ~SessionService();

  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  ServiceResponse create(const nlohmann::json& payload);
  ServiceResponse status(const std::string& id);
  ServiceResponse query(const std::string& id);
  ServiceResponse answer(const std::string& id, const nlohmann::json& body);
  ServiceResponse result(const std::string& id);
  ServiceResponse transcript(const std::string& id);
  ServiceResponse health() const;

  std::size_t session_count() const;
  const ServiceConfig& config() const { return config_; }

 private:
  struct Record;

  std::shared_ptr<Record> find(const std::string& id) const;
  std::shared_ptr<Record> build(const std::string& id, const nlohmann::json& payload, const std::string& created) const;
  nlohmann::json query_body(const Record& r) const;
  nlohmann::json result_body(const Record& r) const;
  nlohmann::json progress(const Record& r) const;
  ServiceResponse advance(Record& r);
  void append_log(const std::string& id, const nlohmann::json& line) const;
  void replay();
  std::string fresh_id();

  ServiceConfig config_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Record>> sessions_;
  mutable std::mutex index_mutex_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

}  // namespace memlearn
