#pragma once

#include <cstddef>
#include <functional>

#include "dlproof/ontology.hpp"

namespace dlproof {

struct TableauConfig {
  // Upper bound on tableau nodes created by one call.
  std::size_t maxNodes = 100000;
};

// Decides O ⊨ a for ALCH ontologies. Concept inclusions are refuted through
// satisfiability of lhs ⊓ ¬rhs; role inclusions via the reflexive-transitive
// closure of told role inclusions. Throws ResourceExhausted when the node
// bound is hit and FragmentError for inputs outside ALCH.
bool entails(const Ontology& o, const Axiom& a, TableauConfig cfg = {});

// Satisfiability of `c` with respect to the ontology.
bool isSatisfiable(const Ontology& o, const Concept& c, TableauConfig cfg = {});

using EntailmentOracle = std::function<bool(const Ontology&, const Axiom&)>;

// Tableau-backed oracle with the default configuration.
EntailmentOracle tableauOracle(TableauConfig cfg = {});

}  // namespace dlproof
