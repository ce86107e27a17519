#pragma once

#include <memory>
#include <string>

namespace memlearn {

class SessionService;

struct HttpConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Directory served at "/" (the web UI bundle); skipped when empty or absent.
  std::string static_dir;
};

// Routes:
//   GET  /health
//   POST /sessions                  JSON body, or multipart with a "kind"
//                                   field and a "chart" or "family" file
//   GET  /sessions/{id}
//   GET  /sessions/{id}/query
//   POST /sessions/{id}/answer
//   GET  /sessions/{id}/result
//   GET  /sessions/{id}/transcript
class HttpFrontend {
 public:
  HttpFrontend(SessionService& service, HttpConfig config);
  ~HttpFrontend();

  // Binds and returns the actual port; throws Error on failure.
  int bind();
  // Serves until stop(); call after bind().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace memlearn
