#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dlproof/ontology.hpp"
#include "dlproof/rules.hpp"

namespace dlproof {

struct Hyperedge {
  std::vector<std::size_t> premises;  // sorted vertex ids
  std::size_t conclusion;
  InferenceRule rule;
};

// Hypergraph of recorded inferences over axiom-labelled vertices, one vertex
// per distinct axiom. Cycles are allowed; proofs extracted from it are not.
class DerivationStructure {
 public:
  std::size_t addVertex(const Axiom& a);
  std::optional<std::size_t> find(const Axiom& a) const;

  // Adds the edge unless an identical one exists or the conclusion is among
  // the premises. Returns whether an edge was added.
  bool addEdge(std::vector<std::size_t> premises, std::size_t conclusion, InferenceRule rule);

  const std::vector<Axiom>& vertices() const { return vertices_; }
  const Axiom& label(std::size_t v) const { return vertices_[v]; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::span<const std::size_t> edgesInto(std::size_t v) const { return into_[v]; }
  std::span<const std::size_t> edgesUsing(std::size_t v) const { return using_[v]; }
  bool isAsserted(std::size_t v) const;

  std::size_t size() const { return vertices_.size(); }

 private:
  std::vector<Axiom> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Hyperedge> edges_;
  std::unordered_set<std::string> edgeKeys_;
  std::vector<std::vector<std::size_t>> into_;
  std::vector<std::vector<std::size_t>> using_;
};

// Goal-directed consequence-based saturation for ELH. Every ontology axiom
// gets an Asserted edge; derived subsumptions C ⊑ D are materialized for C a
// concept name, ⊤, or an existential filler, and D a subconcept occurring in
// the ontology. Role inclusions r ⊑* s are materialized as RoleInclusion
// vertices. Throws FragmentError on non-ELH input.
DerivationStructure saturate(const Ontology& o);

// Atomic CIs A ⊑ B between concept names of `o` entailed by `o`, sorted.
// Reflexive A ⊑ A entries are included only when requested.
std::vector<Axiom> entailedAtomicCIs(const Ontology& o, bool includeTautologies = false);

// Same, read off an existing saturation of `o`.
std::vector<Axiom> entailedAtomicCIs(const DerivationStructure& d, const Ontology& o,
                                     bool includeTautologies = false);

}  // namespace dlproof
