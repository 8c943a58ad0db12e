#pragma once

#include <string>

#include "dlproof/ontology.hpp"

namespace dlproof {

// Canonical representative of a (goal, axiom set) pair under bijective
// renaming of concept and role names. Concept names become C0, C1, ... and
// role names R0, R1, ...; the text lists the renamed goal followed by the
// renamed axioms in sorted order.
struct CanonicalPattern {
  std::string text;

  friend bool operator==(const CanonicalPattern&, const CanonicalPattern&) = default;
  friend auto operator<=>(const CanonicalPattern&, const CanonicalPattern&) = default;
};

// Axioms are treated as a set. Names are first partitioned by iterated colour
// refinement over their occurrence contexts; remaining ties are broken by
// individualizing each member of the first non-singleton cell in turn, and
// the lexicographically least renamed serialization over all leaves wins.
CanonicalPattern canonicalPattern(const Axiom& goal, const Ontology& axioms);

}  // namespace dlproof
