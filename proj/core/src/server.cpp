#include "dlproof/server.hpp"

#include <httplib.h>

#include "dlproof/error.hpp"

namespace dlproof {

struct HttpServer::Impl {
  httplib::Server http;
};

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

std::optional<nlohmann::json> body(const httplib::Request& req, httplib::Response& res) {
  auto j = nlohmann::json::parse(req.body, nullptr, false);
  if (j.is_discarded()) {
    send(res, {400, nlohmann::json{{"error", "BadRequest"}, {"message", "request body is not JSON"}}.dump()});
    return std::nullopt;
  }
  return j;
}

}  // namespace

HttpServer::HttpServer(Workbench& wb, std::optional<std::filesystem::path> staticDir)
    : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  http.Post("/api/projects", [&wb](const httplib::Request& req, httplib::Response& res) {
    if (auto j = body(req, res)) send(res, wb.createProject(*j));
  });
  http.Get(R"(/api/projects/([^/]+))", [&wb](const httplib::Request& req, httplib::Response& res) {
    send(res, wb.getProject(req.matches[1]));
  });
  http.Get(R"(/api/projects/([^/]+)/entailments)",
           [&wb](const httplib::Request& req, httplib::Response& res) {
             send(res, wb.listEntailments(req.matches[1]));
           });
  http.Post(R"(/api/projects/([^/]+)/proofs)",
            [&wb](const httplib::Request& req, httplib::Response& res) {
              if (auto j = body(req, res)) send(res, wb.generateProof(req.matches[1], *j));
            });
  http.Get(R"(/api/projects/([^/]+)/proofs/([^/]+))",
           [&wb](const httplib::Request& req, httplib::Response& res) {
             send(res, wb.getProof(req.matches[1], req.matches[2]));
           });
  http.Get(R"(/api/rules/(.+))", [&wb](const httplib::Request& req, httplib::Response& res) {
    send(res, wb.rule(req.matches[1]));
  });
  http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    send(res, {500, nlohmann::json{{"error", "InternalError"}, {"message", message}}.dump()});
  });
  if (staticDir && !http.set_mount_point("/", staticDir->string())) {
    throw Error("static directory does not exist: " + staticDir->string());
  }
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }

int HttpServer::bindAnyPort(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool HttpServer::serve() { return impl_->http.listen_after_bind(); }

void HttpServer::waitUntilReady() const { impl_->http.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

}  // namespace dlproof
