#include "dlproof/proofs.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "dlproof/error.hpp"
#include "dlproof/syntax.hpp"

namespace dlproof {

const char* kindName(VertexKind k) {
  switch (k) {
    case VertexKind::Asserted: return "asserted";
    case VertexKind::Inferred: return "inferred";
    case VertexKind::Known: return "known";
    case VertexKind::Conclusion: return "conclusion";
  }
  return "";
}

std::size_t Proof::addVertex(Axiom a, VertexKind kind) {
  std::size_t i = vertices_.size();
  vertices_.push_back({"n" + std::to_string(i), std::move(a), kind});
  into_.emplace_back();
  return i;
}

void Proof::addStep(std::vector<std::size_t> premises, std::size_t conclusion, InferenceRule rule) {
  into_[conclusion] = steps_.size();
  steps_.push_back({"i" + std::to_string(steps_.size()), std::move(premises), conclusion,
                    std::move(rule)});
}

const ProofStep* Proof::stepInto(std::size_t v) const {
  return into_[v] ? &steps_[*into_[v]] : nullptr;
}

const char* measureName(Measure m) {
  switch (m) {
    case Measure::TreeSize: return "size";
    case Measure::Depth: return "depth";
    case Measure::WeightedSize: return "weighted-size";
  }
  return "";
}

std::optional<Measure> parseMeasure(std::string_view s) {
  if (s == "size" || s == "tree-size") return Measure::TreeSize;
  if (s == "depth") return Measure::Depth;
  if (s == "weighted-size" || s == "weighted") return Measure::WeightedSize;
  return std::nullopt;
}

namespace {

std::int64_t combine(Measure m, const Axiom& a, const std::vector<std::int64_t>& children,
                     bool hasStep) {
  switch (m) {
    case Measure::TreeSize: {
      std::int64_t s = 1;
      for (auto c : children) s += c;
      return s;
    }
    case Measure::Depth: {
      if (!hasStep) return 0;
      std::int64_t d = 0;
      for (auto c : children) d = std::max(d, c);
      return d + 1;
    }
    case Measure::WeightedSize: {
      std::int64_t s = symbolCount(a);
      for (auto c : children) s += c;
      return s;
    }
  }
  return 0;
}

std::int64_t evaluateAt(const Proof& p, std::size_t v, Measure m) {
  const ProofStep* step = p.stepInto(v);
  std::vector<std::int64_t> children;
  if (step) {
    for (auto c : step->premises) children.push_back(evaluateAt(p, c, m));
  }
  return combine(m, p.vertices()[v].axiom, children, step != nullptr);
}

}  // namespace

std::int64_t evaluateMeasure(const Proof& p, Measure m) {
  return p.size() == 0 ? 0 : evaluateAt(p, 0, m);
}

Signature signatureOf(const Proof& p) {
  Signature sig;
  for (const auto& v : p.vertices()) collectSignature(v.axiom, sig);
  return sig;
}

double signatureCoverage(const Proof& p, const Signature& s) {
  Signature sig = signatureOf(p);
  if (sig.empty()) return 1.0;
  return static_cast<double>(sig.intersect(s).size()) / static_cast<double>(sig.size());
}

std::vector<std::string> structuralErrors(const Proof& p, const Ontology* o,
                                          const Signature* known) {
  std::vector<std::string> errors;
  if (p.size() == 0) return {"empty proof"};
  std::vector<int> premiseUses(p.size(), 0);
  std::vector<int> conclusions(p.size(), 0);
  for (const auto& s : p.steps()) {
    if (s.conclusion >= p.size()) {
      errors.push_back(s.id + ": conclusion out of range");
      continue;
    }
    ++conclusions[s.conclusion];
    for (auto q : s.premises) {
      if (q >= p.size()) {
        errors.push_back(s.id + ": premise out of range");
      } else {
        ++premiseUses[q];
      }
    }
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto& vx = p.vertices()[v];
    if (conclusions[v] > 1) errors.push_back(vx.id + ": concluded by several steps");
    if (v == 0 && premiseUses[v] != 0) errors.push_back(vx.id + ": root used as premise");
    if (v != 0 && premiseUses[v] != 1) errors.push_back(vx.id + ": not premise of exactly one step");
    bool leaf = conclusions[v] == 0;
    if (leaf && vx.kind != VertexKind::Asserted && vx.kind != VertexKind::Known) {
      errors.push_back(vx.id + ": leaf is neither asserted nor known");
    }
    if (!leaf && (vx.kind == VertexKind::Asserted || vx.kind == VertexKind::Known)) {
      errors.push_back(vx.id + ": derived vertex marked as leaf");
    }
    if (v == 0 && !leaf && vx.kind != VertexKind::Conclusion) {
      errors.push_back(vx.id + ": root of a derivation is not a conclusion");
    }
    if (v != 0 && vx.kind == VertexKind::Conclusion) errors.push_back(vx.id + ": inner conclusion");
    if (o && vx.kind == VertexKind::Asserted && !o->contains(vx.axiom)) {
      errors.push_back(vx.id + ": asserted axiom not in the ontology");
    }
    if (known && vx.kind == VertexKind::Known && !known->contains(dlproof::signatureOf(vx.axiom))) {
      errors.push_back(vx.id + ": known axiom outside the signature");
    }
  }
  // Every vertex must hang below the root.
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]) {
      errors.push_back(p.vertices()[v].id + ": reached twice");
      continue;
    }
    seen[v] = true;
    if (const ProofStep* s = p.stepInto(v)) {
      for (auto q : s->premises) stack.push_back(q);
    }
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (!seen[v]) errors.push_back(p.vertices()[v].id + ": unreachable from the root");
  }
  return errors;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

struct Best {
  std::int64_t cost = kInf;
  std::optional<VertexKind> leaf;
  std::optional<std::size_t> edge;
};

class Extractor {
 public:
  Extractor(const DerivationStructure& d, Measure m, const Signature& known)
      : d_(d), m_(m), known_(known), best_(d.size()), done_(d.size(), false),
        pending_(d.edges().size(), 0) {}

  Proof run(std::size_t goal) {
    std::vector<bool> derivable = derivableVertices();
    for (std::size_t v = 0; v < d_.size(); ++v) {
      if (d_.isAsserted(v)) {
        offerLeaf(v, VertexKind::Asserted);
      } else if (!known_.empty() && derivable[v] &&
                 known_.contains(signatureOf(d_.label(v)))) {
        offerLeaf(v, VertexKind::Known);
      }
    }
    for (std::size_t e = 0; e < d_.edges().size(); ++e) {
      const auto& edge = d_.edges()[e];
      pending_[e] = edge.premises.size();
      if (edge.rule.id != RuleId::Asserted && edge.premises.empty()) fire(e);
    }
    while (!queue_.empty()) {
      auto [cost, key, v] = queue_.top();
      queue_.pop();
      if (done_[v] || cost != best_[v].cost) continue;
      done_[v] = true;
      for (auto e : d_.edgesUsing(v)) {
        if (--pending_[e] == 0) fire(e);
      }
    }
    if (best_[goal].cost == kInf) {
      throw NotDerivable("no proof of " + render(d_.label(goal), RenderStyle::Pretty));
    }
    Proof p;
    unravel(p, goal, true);
    return p;
  }

 private:
  using Entry = std::tuple<std::int64_t, std::string, std::size_t>;

  std::vector<bool> derivableVertices() const {
    std::vector<bool> ok(d_.size(), false);
    std::vector<std::size_t> missing(d_.edges().size());
    std::vector<std::size_t> work;
    for (std::size_t e = 0; e < d_.edges().size(); ++e) {
      missing[e] = d_.edges()[e].premises.size();
      if (missing[e] == 0) work.push_back(e);
    }
    while (!work.empty()) {
      std::size_t e = work.back();
      work.pop_back();
      std::size_t c = d_.edges()[e].conclusion;
      if (ok[c]) continue;
      ok[c] = true;
      for (auto f : d_.edgesUsing(c)) {
        if (--missing[f] == 0) work.push_back(f);
      }
    }
    return ok;
  }

  void offer(std::size_t v, std::int64_t cost, std::optional<VertexKind> leaf,
             std::optional<std::size_t> edge) {
    if (done_[v] || cost >= best_[v].cost) return;
    best_[v] = {cost, leaf, edge};
    queue_.emplace(cost, d_.label(v).key(), v);
  }

  void offerLeaf(std::size_t v, VertexKind kind) {
    if (best_[v].leaf) return;
    offer(v, combine(m_, d_.label(v), {}, false), kind, std::nullopt);
  }

  void fire(std::size_t e) {
    const auto& edge = d_.edges()[e];
    std::vector<std::int64_t> children;
    for (auto p : edge.premises) children.push_back(best_[p].cost);
    offer(edge.conclusion, combine(m_, d_.label(edge.conclusion), children, true), std::nullopt, e);
  }

  std::size_t unravel(Proof& p, std::size_t v, bool isRoot) {
    const Best& b = best_[v];
    if (b.leaf) return p.addVertex(d_.label(v), *b.leaf);
    std::size_t self = p.addVertex(d_.label(v), isRoot ? VertexKind::Conclusion : VertexKind::Inferred);
    const auto& edge = d_.edges()[*b.edge];
    std::vector<std::size_t> premises;
    for (auto q : edge.premises) premises.push_back(unravel(p, q, false));
    p.addStep(std::move(premises), self, edge.rule);
    return self;
  }

  const DerivationStructure& d_;
  Measure m_;
  const Signature& known_;
  std::vector<Best> best_;
  std::vector<bool> done_;
  std::vector<std::size_t> pending_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue_;
};

}  // namespace

Proof extractOptimalProof(const DerivationStructure& d, const Axiom& goal, Measure m,
                          const Signature& known) {
  auto v = d.find(goal);
  if (!v) throw NotDerivable("goal is not in the derivation structure: " + goal.key());
  return Extractor(d, m, known).run(*v);
}

nlohmann::json proofToJson(const Proof& p, std::string_view id, std::string_view method,
                           const Signature& known) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nodes.push_back({{"id", v.id},
                     {"axiom", render(v.axiom, RenderStyle::Functional)},
                     {"pretty", render(v.axiom, RenderStyle::Pretty)},
                     {"kind", kindName(v.kind)}});
  }
  nlohmann::json inferences = nlohmann::json::array();
  for (const auto& s : p.steps()) {
    nlohmann::json premises = nlohmann::json::array();
    for (auto q : s.premises) premises.push_back(p.vertices()[q].id);
    inferences.push_back({{"id", s.id},
                          {"rule", s.rule.str()},
                          {"premises", std::move(premises)},
                          {"conclusion", p.vertices()[s.conclusion].id}});
  }
  return {{"id", id},
          {"goal", render(p.goal(), RenderStyle::Functional)},
          {"method", method},
          {"measures",
           {{"treeSize", evaluateMeasure(p, Measure::TreeSize)},
            {"depth", evaluateMeasure(p, Measure::Depth)},
            {"weightedSize", evaluateMeasure(p, Measure::WeightedSize)}}},
          {"coveragePct", 100.0 * signatureCoverage(p, known)},
          {"nodes", std::move(nodes)},
          {"inferences", std::move(inferences)}};
}

}  // namespace dlproof
