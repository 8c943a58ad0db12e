#include "dlproof/service.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include "dlproof/elh.hpp"
#include "dlproof/error.hpp"
#include "dlproof/fbp.hpp"
#include "dlproof/proofs.hpp"
#include "dlproof/rules.hpp"
#include "dlproof/syntax.hpp"
#include "dlproof/tableau.hpp"

namespace dlproof {

using nlohmann::json;

struct Workbench::Project {
  std::string id;
  std::string name;
  std::string ontologyText;
  Ontology ontology;
  Fragment fragment = Fragment::Other;

  mutable std::shared_mutex mutex;
  std::optional<DerivationStructure> saturation;
  std::map<std::string, std::string> proofs;  // id -> serialized record
  std::size_t nextProof = 1;

  json summary() const {
    return {{"id", id}, {"name", name}, {"fragment", fragmentName(fragment)},
            {"axiomCount", ontology.size()}};
  }
};

namespace {

Response reply(int status, const json& body) { return {status, body.dump()}; }

Response failure(int status, std::string_view kind, std::string_view message) {
  return reply(status, {{"error", kind}, {"message", message}});
}

struct BadRequest : Error {
  using Error::Error;
};

const json& field(const json& request, const char* name, json::value_t type) {
  if (!request.is_object() || !request.contains(name)) {
    throw BadRequest(std::string("missing field '") + name + "'");
  }
  const json& v = request[name];
  if (v.type() != type) throw BadRequest(std::string("field '") + name + "' has the wrong type");
  return v;
}

std::string readFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void writeFile(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, p);
}

std::size_t numberAfter(const std::string& id, std::size_t prefix) {
  try {
    return std::stoul(id.substr(prefix));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

Workbench::Workbench(WorkbenchOptions opts) : opts_(std::move(opts)) {
  if (opts_.storeDir) load();
}

Workbench::~Workbench() = default;

std::shared_ptr<Workbench::Project> Workbench::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = projects_.find(id);
  return it == projects_.end() ? nullptr : it->second;
}

void Workbench::load() {
  auto root = *opts_.storeDir / "projects";
  if (!std::filesystem::exists(root)) return;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.path().extension() != ".json") continue;
    json j = json::parse(readFile(entry.path()));
    auto p = std::make_shared<Project>();
    p->id = j.at("id").get<std::string>();
    p->name = j.at("name").get<std::string>();
    p->ontologyText = j.at("ontologyText").get<std::string>();
    p->ontology = parseOntology(p->ontologyText, p->name);
    p->fragment = fragmentOf(p->ontology);
    auto proofDir = root / p->id / "proofs";
    if (std::filesystem::exists(proofDir)) {
      for (const auto& f : std::filesystem::directory_iterator(proofDir)) {
        if (f.path().extension() != ".json") continue;
        std::string pid = f.path().stem().string();
        p->proofs[pid] = readFile(f.path());
        p->nextProof = std::max(p->nextProof, numberAfter(pid, 5) + 1);
      }
    }
    nextProject_ = std::max(nextProject_, numberAfter(p->id, 1) + 1);
    projects_[p->id] = std::move(p);
  }
}

void Workbench::persistProject(const Project& p) const {
  if (!opts_.storeDir) return;
  json j = p.summary();
  j["ontologyText"] = p.ontologyText;
  writeFile(*opts_.storeDir / "projects" / (p.id + ".json"), j.dump(2));
}

void Workbench::persistProof(const Project& p, const std::string& proofId,
                             const std::string& body) const {
  if (!opts_.storeDir) return;
  writeFile(*opts_.storeDir / "projects" / p.id / "proofs" / (proofId + ".json"), body);
}

Response Workbench::createProject(const json& request) {
  auto p = std::make_shared<Project>();
  try {
    p->name = field(request, "name", json::value_t::string).get<std::string>();
    p->ontologyText = field(request, "ontologyText", json::value_t::string).get<std::string>();
    p->ontology = parseOntology(p->ontologyText, p->name);
  } catch (const SyntaxError& e) {
    return reply(400, {{"error", "SyntaxError"}, {"message", e.what()}, {"line", e.line()},
                       {"col", e.col()}, {"expected", e.expected()}});
  } catch (const DuplicateAxiom& e) {
    return failure(400, "DuplicateAxiom", e.what());
  } catch (const BadRequest& e) {
    return failure(400, "BadRequest", e.what());
  }
  p->fragment = fragmentOf(p->ontology);
  {
    std::unique_lock lock(mutex_);
    p->id = "p" + std::to_string(nextProject_++);
    projects_[p->id] = p;
  }
  persistProject(*p);
  return reply(201, p->summary());
}

Response Workbench::getProject(const std::string& projectId) const {
  auto p = find(projectId);
  if (!p) return failure(404, "NotFound", "unknown project " + projectId);
  return reply(200, p->summary());
}

namespace {

const DerivationStructure& saturation(std::optional<DerivationStructure>& cache,
                                      std::shared_mutex& m, const Ontology& o) {
  {
    std::shared_lock lock(m);
    if (cache) return *cache;
  }
  DerivationStructure d = saturate(o);
  std::unique_lock lock(m);
  if (!cache) cache = std::move(d);
  return *cache;
}

}  // namespace

Response Workbench::listEntailments(const std::string& projectId) {
  auto p = find(projectId);
  if (!p) return failure(404, "NotFound", "unknown project " + projectId);
  if (p->fragment != Fragment::ELH) {
    return failure(422, "FragmentError",
                   std::string("entailment listing needs an ELH ontology, this one is ") +
                       fragmentName(p->fragment) +
                       "; request a proof with method heur, symb, size or size-weighted and an explicit goal");
  }
  const DerivationStructure& d = saturation(p->saturation, p->mutex, p->ontology);
  json out = json::array();
  for (const auto& a : entailedAtomicCIs(d, p->ontology)) {
    out.push_back({{"functional", render(a, RenderStyle::Functional)},
                   {"pretty", render(a, RenderStyle::Pretty)}});
  }
  return reply(200, out);
}

Response Workbench::generateProof(const std::string& projectId, const json& request) {
  auto p = find(projectId);
  if (!p) return failure(404, "NotFound", "unknown project " + projectId);

  std::optional<Axiom> goal;
  std::string method;
  Measure measure = Measure::TreeSize;
  Signature known;
  std::vector<std::string> knownNames;
  try {
    goal = parseAxiom(field(request, "goal", json::value_t::string).get<std::string>());
    method = field(request, "method", json::value_t::string).get<std::string>();
    if (request.contains("measure") && !request["measure"].is_null()) {
      auto m = parseMeasure(field(request, "measure", json::value_t::string).get<std::string>());
      if (!m) throw BadRequest("unknown measure " + request["measure"].get<std::string>());
      measure = *m;
    }
    if (request.contains("knownSignature") && !request["knownSignature"].is_null()) {
      Signature ontologySig = signatureOf(p->ontology);
      for (const auto& n : field(request, "knownSignature", json::value_t::array)) {
        if (!n.is_string()) throw BadRequest("knownSignature entries must be strings");
        std::string name = n.get<std::string>();
        knownNames.push_back(name);
        if (ontologySig.roles.count(RoleName(name))) {
          known.roles.insert(RoleName(name));
        } else {
          known.concepts.insert(ConceptName(name));
        }
      }
    }
  } catch (const SyntaxError& e) {
    return reply(400, {{"error", "SyntaxError"}, {"message", e.what()}, {"line", e.line()},
                       {"col", e.col()}, {"expected", e.expected()}});
  } catch (const BadRequest& e) {
    return failure(400, "BadRequest", e.what());
  }

  std::optional<FbpMethod> fbp = parseFbpMethod(method);
  if (method != "elk-minimal" && !fbp) return failure(400, "BadRequest", "unknown method " + method);
  if (!goal->isAtomicCI()) return failure(422, "UnsupportedGoal", "the goal must be an atomic CI A ⊑ B");

  std::optional<Proof> proof;
  try {
    if (!fbp) {
      if (p->fragment != Fragment::ELH) {
        return failure(422, "FragmentError",
                       "elk-minimal needs an ELH ontology; use heur, symb, size or size-weighted");
      }
      const DerivationStructure& d = saturation(p->saturation, p->mutex, p->ontology);
      if (!d.find(*goal)) return failure(409, "NotEntailed", "the ontology does not entail the goal");
      proof = extractOptimalProof(d, *goal, measure, known);
    } else {
      if (p->fragment == Fragment::Other) {
        return failure(422, "FragmentError", "forgetting-based proofs need an ALCH ontology");
      }
      FbpTask t;
      t.ontology = p->ontology;
      t.goal = *goal;
      t.method = *fbp;
      t.overallBudget = opts_.fbpBudget;
      t.perForgetTimeout = opts_.perForgetTimeout;
      proof = fbpProof(t).proof;
    }
  } catch (const NotEntailed& e) {
    return failure(409, "NotEntailed", e.what());
  } catch (const NotDerivable& e) {
    return failure(409, "NotEntailed", e.what());
  } catch (const BudgetExceeded& e) {
    return failure(504, "BudgetExceeded", e.what());
  } catch (const ResourceExhausted& e) {
    return failure(504, "ResourceExhausted", e.what());
  } catch (const FragmentError& e) {
    return failure(422, "FragmentError", e.what());
  } catch (const NoProofWithinBound& e) {
    return failure(422, "NoProofWithinBound", e.what());
  }

  std::string body;
  std::string proofId;
  {
    std::unique_lock lock(p->mutex);
    proofId = "proof" + std::to_string(p->nextProof++);
    json record = proofToJson(*proof, proofId, method, known);
    record["measure"] = measureName(measure);
    record["knownSignature"] = knownNames;
    body = record.dump();
    p->proofs[proofId] = body;
  }
  persistProof(*p, proofId, body);
  return {201, body};
}

Response Workbench::getProof(const std::string& projectId, const std::string& proofId) const {
  auto p = find(projectId);
  if (!p) return failure(404, "NotFound", "unknown project " + projectId);
  std::shared_lock lock(p->mutex);
  auto it = p->proofs.find(proofId);
  if (it == p->proofs.end()) return failure(404, "NotFound", "unknown proof " + proofId);
  return {200, it->second};
}

Response Workbench::rule(const std::string& ruleId) const {
  auto info = ruleInfo(ruleId);
  if (!info) return failure(404, "NotFound", "unknown rule " + ruleId);
  return reply(200, {{"id", info->id},
                     {"displayName", info->displayName},
                     {"description", info->description},
                     {"schematicPremises", info->schematicPremises},
                     {"schematicConclusion", info->schematicConclusion}});
}

}  // namespace dlproof
