#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "dlproof/forgetting.hpp"

namespace dlproof {

// Status code and serialized JSON body of one request.
struct Response {
  int status = 200;
  std::string body;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

struct WorkbenchOptions {
  // When set, projects and proofs are written here and reloaded on startup.
  std::optional<std::filesystem::path> storeDir;
  std::chrono::milliseconds fbpBudget{300000};
  std::chrono::milliseconds perForgetTimeout = kDefaultForgettingTimeout;
};

// Transport-independent request handling behind the REST interface. All
// methods are safe to call concurrently.
class Workbench {
 public:
  explicit Workbench(WorkbenchOptions opts = {});
  ~Workbench();

  // {name, ontologyText} -> 201 {id, name, fragment, axiomCount}; 400 on bad input.
  Response createProject(const nlohmann::json& request);
  Response getProject(const std::string& projectId) const;
  // 200 [{functional, pretty}]; 404 unknown project; 422 outside ELH.
  Response listEntailments(const std::string& projectId);
  // {goal, method, measure, knownSignature} -> 201 proof record; 400 bad
  // request, 404, 409 not entailed, 422 method unsuitable, 504 out of budget.
  Response generateProof(const std::string& projectId, const nlohmann::json& request);
  // Byte-identical on every call.
  Response getProof(const std::string& projectId, const std::string& proofId) const;
  Response rule(const std::string& ruleId) const;

 private:
  struct Project;

  std::shared_ptr<Project> find(const std::string& id) const;
  void persistProject(const Project& p) const;
  void persistProof(const Project& p, const std::string& proofId, const std::string& body) const;
  void load();

  WorkbenchOptions opts_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Project>> projects_;
  std::size_t nextProject_ = 1;
};

}  // namespace dlproof
