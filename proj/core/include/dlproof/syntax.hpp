#pragma once

#include <string>
#include <string_view>

#include "dlproof/ontology.hpp"

namespace dlproof {

// Functional-style text format:
//
//   Ontology := { SubClassOf(C C) | SubObjectPropertyOf(Name Name) }
//   C        := Name | owl:Thing | owl:Nothing
//             | ObjectIntersectionOf(C C {C}) | ObjectUnionOf(C C {C})
//             | ObjectComplementOf(C) | ObjectSomeValuesFrom(Name C)
//             | ObjectAllValuesFrom(Name C)
//
// Whitespace is insignificant and `#` starts a comment running to end of line.
// Errors are reported as SyntaxError with 1-based line and column.
Ontology parseOntology(std::string_view text, std::string name = {});
Axiom parseAxiom(std::string_view text);
Concept parseConcept(std::string_view text);

// Signature file: one name per line, `concept:` or `role:` prefixed; an
// unprefixed name is a concept name.
Signature parseSignature(std::string_view text);

enum class RenderStyle { Functional, Pretty };

std::string render(const Concept& c, RenderStyle style = RenderStyle::Functional);
std::string render(const Axiom& a, RenderStyle style = RenderStyle::Functional);
// One axiom per line in functional style; reparses to an equal ontology.
std::string render(const Ontology& o);

}  // namespace dlproof
