#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlproof/elh.hpp"

namespace dlproof {

enum class VertexKind { Asserted, Inferred, Known, Conclusion };

const char* kindName(VertexKind k);

struct ProofVertex {
  std::string id;
  Axiom axiom;
  VertexKind kind;
};

struct ProofStep {
  std::string id;
  std::vector<std::size_t> premises;  // vertex indices
  std::size_t conclusion;
  InferenceRule rule;
};

// Tree-shaped proof. Vertex 0 is the root once any vertex exists. Vertex and
// step ids are "n<i>" and "i<i>" in creation order.
class Proof {
 public:
  std::size_t addVertex(Axiom a, VertexKind kind);
  void addStep(std::vector<std::size_t> premises, std::size_t conclusion, InferenceRule rule);

  const std::vector<ProofVertex>& vertices() const { return vertices_; }
  const std::vector<ProofStep>& steps() const { return steps_; }
  const ProofVertex& root() const { return vertices_.front(); }
  const Axiom& goal() const { return root().axiom; }

  // Step concluding vertex v, if any.
  const ProofStep* stepInto(std::size_t v) const;

  std::size_t size() const { return vertices_.size(); }

 private:
  std::vector<ProofVertex> vertices_;
  std::vector<ProofStep> steps_;
  std::vector<std::optional<std::size_t>> into_;
};

enum class Measure { TreeSize, Depth, WeightedSize };

const char* measureName(Measure m);
std::optional<Measure> parseMeasure(std::string_view s);

// Recursive measure at the root. Depth counts steps, so a lone vertex has
// depth 0. WeightedSize weights each vertex by symbolCount of its axiom.
std::int64_t evaluateMeasure(const Proof& p, Measure m);

// |sig(p) ∩ s| / |sig(p)|; 1 when the proof has an empty signature.
double signatureCoverage(const Proof& p, const Signature& s);

Signature signatureOf(const Proof& p);

// Violations of the tree-proof invariants; empty when well-formed. Checks
// tree shape, leaf and root kinds, and, when given, that Asserted leaves
// belong to `o` and Known vertices lie within `known`.
std::vector<std::string> structuralErrors(const Proof& p, const Ontology* o = nullptr,
                                          const Signature* known = nullptr);

// Minimal tree proof of `goal` in `d` under `m`, found by a Dijkstra-style
// search over the hypergraph (Knuth's generalization to superior functions).
// Asserted vertices and derivable vertices whose signature lies within a
// non-empty `known` start as single-vertex proofs. Ties are broken by cost,
// then by the axiom's functional serialization. Throws NotDerivable.
Proof extractOptimalProof(const DerivationStructure& d, const Axiom& goal, Measure m,
                          const Signature& known = {});

// Proof JSON as served by the workbench.
nlohmann::json proofToJson(const Proof& p, std::string_view id, std::string_view method,
                           const Signature& known);

}  // namespace dlproof
