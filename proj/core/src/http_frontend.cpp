#include "memlearn/http_frontend.hpp"

#include <filesystem>

#include "httplib.h"
#include "memlearn/errors.hpp"
#include "memlearn/service.hpp"

namespace memlearn {

using nlohmann::json;

struct HttpFrontend::Impl {
  SessionService& service;
  HttpConfig config;
  httplib::Server server;

  Impl(SessionService& s, HttpConfig c) : service(s), config(std::move(c)) {}

  static void send(httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  }

  static void send_error(httplib::Response& res, int status, const std::string& code, const std::string& msg) {
    send(res, {status, json{{"error", msg}, {"code", code}}});
  }

  // Multipart create: "kind" field plus a "chart" (CSV) or "family" (JSON) file.
  static json payload_from_multipart(const httplib::Request& req) {
    json payload;
    if (!req.has_file("kind")) throw ValidationError("multipart create needs a \"kind\" field");
    payload["kind"] = req.get_file_value("kind").content;
    if (req.has_file("chart")) {
      payload["chart_csv"] = req.get_file_value("chart").content;
    } else if (req.has_file("family")) {
      try {
        payload["family"] = json::parse(req.get_file_value("family").content);
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("family file: ") + e.what());
      }
    } else {
      throw ValidationError("multipart create needs a \"chart\" or \"family\" file");
    }
    return payload;
  }

  static json body_json(const httplib::Request& req) {
    try {
      return json::parse(req.body);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("request body is not JSON: ") + e.what());
    }
  }

  void routes() {
    server.Get("/health", [this](const httplib::Request&, httplib::Response& res) { send(res, service.health()); });

    server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        const json payload = req.is_multipart_form_data() ? payload_from_multipart(req) : body_json(req);
        send(res, service.create(payload));
      } catch (const ValidationError& e) {
        send_error(res, 400, "validation", e.what());
      }
    });

    server.Get(R"(/sessions/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.status(req.matches[1]));
    });
    server.Get(R"(/sessions/([0-9a-f]+)/query)", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.query(req.matches[1]));
    });
    server.Post(R"(/sessions/([0-9a-f]+)/answer)", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        send(res, service.answer(req.matches[1], body_json(req)));
      } catch (const ValidationError& e) {
        send_error(res, 400, "validation", e.what());
      }
    });
    server.Get(R"(/sessions/([0-9a-f]+)/result)", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.result(req.matches[1]));
    });
    server.Get(R"(/sessions/([0-9a-f]+)/transcript)", [this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.transcript(req.matches[1]));
    });

    if (!config.static_dir.empty() && std::filesystem::is_directory(config.static_dir)) {
      server.set_mount_point("/", config.static_dir);
    }
  }
};

HttpFrontend::HttpFrontend(SessionService& service, HttpConfig config)
    : impl_(std::make_unique<Impl>(service, std::move(config))) {
  impl_->routes();
}

HttpFrontend::~HttpFrontend() { stop(); }

int HttpFrontend::bind() {
  auto& c = impl_->config;
  if (c.port == 0) {
    const int port = impl_->server.bind_to_any_port(c.host);
    if (port <= 0) throw Error("cannot bind " + c.host);
    c.port = port;
    return port;
  }
  if (!impl_->server.bind_to_port(c.host, c.port)) {
    throw Error("cannot bind " + c.host + ":" + std::to_string(c.port));
  }
  return c.port;
}

void HttpFrontend::serve() { impl_->server.listen_after_bind(); }

void HttpFrontend::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace memlearn
