#include <iostream>

#include "common.hpp"
#include "memlearn/http_frontend.hpp"
#include "memlearn/service.hpp"

namespace memlearn::cli {

namespace {

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir = "memlearn-data";
  std::string static_dir;
  std::size_t session_cap = 1000;
};

int run_serve(const ServeOptions& o) {
  ServiceConfig sc;
  sc.data_dir = o.data_dir;
  sc.session_cap = o.session_cap;
  SessionService service(sc);
  HttpFrontend http(service, HttpConfig{o.host, o.port, o.static_dir});
  const int port = http.bind();
  std::cout << "listening on http://" << o.host << ":" << port << std::endl;
  http.serve();
  return kOk;
}

}  // namespace

void add_serve(CLI::App& app) {
  auto o = std::make_shared<ServeOptions>();
  auto* sub = app.add_subcommand("serve", "Run the HTTP session service");
  sub->add_option("--host", o->host, "Listen address")->envname("MEMLEARN_HOST");
  sub->add_option("--port", o->port, "Listen port (0 picks one)")->envname("MEMLEARN_PORT");
  sub->add_option("--data-dir", o->data_dir, "Session persistence directory")->envname("MEMLEARN_DATA_DIR");
  sub->add_option("--static-dir", o->static_dir, "Web UI bundle served at /")->envname("MEMLEARN_STATIC_DIR");
  sub->add_option("--session-cap", o->session_cap, "Maximum live sessions")->envname("MEMLEARN_SESSION_CAP");
  sub->callback([o] { exit_status() = run_guarded([&] { return run_serve(*o); }); });
}

}  // namespace memlearn::cli
