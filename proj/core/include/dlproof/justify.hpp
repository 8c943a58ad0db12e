#pragma once

#include "dlproof/tableau.hpp"

namespace dlproof {

// One subset-minimal J ⊆ o with J ⊨ goal, found by deletion: axioms are
// tried for removal in the ontology's order and dropped whenever the rest
// still entails the goal. The returned ontology keeps the original order.
//
// Throws NotEntailed when o ⊭ goal. Oracle exceptions propagate.
Ontology oneJustification(const Ontology& o, const Axiom& goal, const EntailmentOracle& entailer);

// Same, using the tableau oracle.
Ontology oneJustification(const Ontology& o, const Axiom& goal);

}  // namespace dlproof
