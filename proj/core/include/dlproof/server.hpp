#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "dlproof/service.hpp"

namespace dlproof {

// REST routes of a Workbench over HTTP:
//   POST /api/projects
//   GET  /api/projects/{id}
//   GET  /api/projects/{id}/entailments
//   POST /api/projects/{id}/proofs
//   GET  /api/projects/{id}/proofs/{pid}
//   GET  /api/rules/{ruleId}
// Everything else is served from `staticDir` when given.
class HttpServer {
 public:
  HttpServer(Workbench& wb, std::optional<std::filesystem::path> staticDir = std::nullopt);
  ~HttpServer();

  // Binds and serves until stop(); returns false if binding fails.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int bindAnyPort(const std::string& host);
  // Serves on a port bound by bindAnyPort until stop().
  bool serve();
  void waitUntilReady() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dlproof
