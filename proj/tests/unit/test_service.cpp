#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "memlearn/http_frontend.hpp"
#include "memlearn/service.hpp"

using namespace memlearn;
using nlohmann::json;

namespace {

const json kPattern534 = json{{"kind", "pattern"}, {"chart", {5, 3, 4}}};

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

json answer_body(int bit, const std::string& key, std::optional<std::size_t> seq = std::nullopt) {
  json b{{"answer", bit}, {"key", key}};
  if (seq) b["seq"] = *seq;
  return b;
}

}  // namespace

TEST_CASE("pattern session walkthrough") {
  SessionService svc;
  auto created = svc.create(kPattern534);
  REQUIRE(created.status == 201);
  const std::string id = created.body.at("id");
  CHECK(created.body.at("status") == "running");
  CHECK(created.body.at("query").at("seq") == 1);
  CHECK(created.body.at("query").at("chart").size() == 3);
  CHECK(created.body.at("progress").at("bound") == 9);

  CHECK(svc.result(id).status == 409);
  auto a1 = svc.answer(id, answer_body(0, "k1", 1));
  REQUIRE(a1.status == 200);
  CHECK(a1.body.at("query").at("seq") == 2);
  auto a2 = svc.answer(id, answer_body(0, "k2", 2));
  REQUIRE(a2.status == 200);
  CHECK(a2.body.at("status") == "done");
  CHECK(a2.body.at("program") ==
        "EXTREME 1 AS v1;\nEXTREME 2 AS v2;\nEXTREME 3 AS v3;\nALERT WHEN v1 >= v2 AND v1 >= v3 AND v3 >= v2;\n");
  CHECK(svc.result(id).status == 200);
  CHECK(svc.query(id).status == 409);
  CHECK(svc.transcript(id).body.at("entries").size() == 2);
  CHECK(svc.status(id).body.at("k") == 3);
}

TEST_CASE("idempotency and sequence conflicts") {
  SessionService svc;
  const std::string id = svc.create(kPattern534).body.at("id");
  auto first = svc.answer(id, answer_body(1, "same", 1));
  REQUIRE(first.status == 200);
  auto replay = svc.answer(id, answer_body(1, "same", 1));
  CHECK(replay.status == 200);
  CHECK(replay.body == first.body);
  CHECK(svc.answer(id, answer_body(0, "same", 1)).status == 409);
  // A late duplicate of query 1 under a new key: same bit is a plain conflict,
  // a different bit contradicts the record.
  auto late = svc.answer(id, answer_body(1, "other", 1));
  CHECK(late.status == 409);
  CHECK(late.body.at("code") == "conflict");
  auto contradict = svc.answer(id, answer_body(0, "third", 1));
  CHECK(contradict.status == 409);
  CHECK(contradict.body.at("code") == "teacher");
  CHECK(svc.answer(id, answer_body(1, "ahead", 7)).status == 409);
}

TEST_CASE("validation and lookup errors") {
  SessionService svc;
  CHECK(svc.status("ffff").status == 404);
  CHECK(svc.query("ffff").status == 404);
  CHECK(svc.create(json{{"kind", "pattern"}, {"chart", {5}}}).status == 400);
  CHECK(svc.create(json{{"kind", "nope"}}).status == 400);
  CHECK(svc.create(json{{"kind", "pattern"}, {"chart_csv", "index,value\n1,1\n3,2\n"}}).status == 400);
  const std::string id = svc.create(kPattern534).body.at("id");
  CHECK(svc.answer(id, json{{"answer", 1}}).status == 400);
  CHECK(svc.answer(id, json{{"answer", 2}, {"key", "x"}}).status == 400);
  CHECK(svc.answer(id, json{{"answer", 1}, {"key", "x"}, {"seq", 0}}).status == 400);
}

TEST_CASE("family sessions") {
  SessionService svc;
  json fam = json::parse(R"({"kind":"var_ineq","n":4,"pairs":[[1,2],[1,4],[1,3],[3,4],[2,4],[3,2]]})");
  auto created = svc.create(json{{"kind", "family-and"}, {"family", fam}});
  REQUIRE(created.status == 201);
  CHECK(created.body.at("progress").at("bound") == 6);
  const std::string id = created.body.at("id");
  // Constant-true target: every query is answered 1.
  json last = created.body;
  for (int i = 1; last.at("status") == "running"; ++i) {
    last = svc.answer(id, answer_body(1, "k" + std::to_string(i))).body;
  }
  CHECK(last.at("progress").at("queries") == 6);
  CHECK(last.at("result").at("members") == json::array());

  json ray = json::parse(R"({"kind":"table","domain":[[1,1],[1,2],[2,1],[2,2]],
                             "rows":[[1,1,1,1],[0,0,1,1],[1,1,1,1],[0,1,0,1]]})");
  auto or_session = svc.create(json{{"kind", "family-or"}, {"family", ray}});
  CHECK(or_session.status == 201);
  CHECK(or_session.body.at("progress").at("bound").is_null());
}

TEST_CASE("session cap") {
  SessionService svc(ServiceConfig{{}, 1});
  CHECK(svc.create(kPattern534).status == 201);
  CHECK(svc.create(kPattern534).status == 503);
}

TEST_CASE("concurrent answers to one query") {
  SessionService svc;
  const std::string id = svc.create(kPattern534).body.at("id");
  std::atomic<int> ok{0}, conflict{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      auto r = svc.answer(id, answer_body(1, "thread" + std::to_string(t), 1));
      (r.status == 200 ? ok : conflict)++;
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok == 1);
  CHECK(conflict == 7);
  CHECK(svc.transcript(id).body.at("entries").size() == 1);
}

TEST_CASE("sessions survive a restart") {
  auto dir = fresh_dir("memlearn_service_replay");
  std::string id;
  json before;
  {
    SessionService svc(ServiceConfig{dir, 10});
    id = svc.create(kPattern534).body.at("id");
    before = svc.answer(id, answer_body(1, "k1", 1)).body;
  }
  CHECK(std::filesystem::exists(dir / "index.ndjson"));
  SessionService svc(ServiceConfig{dir, 10});
  CHECK(svc.session_count() == 1);
  auto q = svc.query(id);
  REQUIRE(q.status == 200);
  CHECK(q.body.at("query") == before.at("query"));
  CHECK(svc.transcript(id).body.at("entries").size() == 1);
  // The idempotency key survives too.
  CHECK(svc.answer(id, answer_body(1, "k1", 1)).body == before);
  std::filesystem::remove_all(dir);
}

TEST_CASE("http routes") {
  SessionService svc;
  auto static_dir = fresh_dir("memlearn_static");
  {
    std::ofstream(static_dir / "index.html") << "<html>ui</html>";
  }
  HttpFrontend http(svc, HttpConfig{"127.0.0.1", 0, static_dir.string()});
  const int port = http.bind();
  std::thread server([&] { http.serve(); });

  httplib::Client cli("127.0.0.1", port);
  auto health = cli.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(json::parse(health->body).at("status") == "ok");

  auto page = cli.Get("/index.html");
  REQUIRE(page);
  CHECK(page->body == "<html>ui</html>");

  auto created = cli.Post("/sessions", kPattern534.dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = json::parse(created->body).at("id");

  httplib::MultipartFormDataItems items{{"kind", "pattern", "", ""},
                                        {"chart", "index,value\n1,5\n2,3\n3,4\n", "chart.csv", "text/csv"}};
  auto multipart = cli.Post("/sessions", items);
  REQUIRE(multipart);
  CHECK(multipart->status == 201);

  CHECK(cli.Get(("/sessions/" + id).c_str())->status == 200);
  CHECK(cli.Get(("/sessions/" + id + "/query").c_str())->status == 200);
  auto ans = cli.Post(("/sessions/" + id + "/answer").c_str(), answer_body(0, "h1", 1).dump(), "application/json");
  REQUIRE(ans);
  CHECK(ans->status == 200);
  CHECK(cli.Post(("/sessions/" + id + "/answer").c_str(), "{not json", "application/json")->status == 400);
  cli.Post(("/sessions/" + id + "/answer").c_str(), answer_body(0, "h2", 2).dump(), "application/json");
  auto result = cli.Get(("/sessions/" + id + "/result").c_str());
  REQUIRE(result);
  CHECK(result->status == 200);
  CHECK(json::parse(result->body).contains("program"));
  CHECK(cli.Get(("/sessions/" + id + "/transcript").c_str())->status == 200);
  CHECK(cli.Get("/sessions/abcdef/query")->status == 404);

  http.stop();
  server.join();
  std::filesystem::remove_all(static_dir);
}
