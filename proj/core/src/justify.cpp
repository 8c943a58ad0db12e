#include "dlproof/justify.hpp"

#include "dlproof/error.hpp"

namespace dlproof {

Ontology oneJustification(const Ontology& o, const Axiom& goal, const EntailmentOracle& entailer) {
  if (!entailer(o, goal)) throw NotEntailed("ontology does not entail " + goal.key());
  Ontology current = o;
  std::size_t i = 0;
  while (i < current.size()) {
    Ontology candidate = current.without(i);
    if (entailer(candidate, goal)) {
      current = std::move(candidate);
    } else {
      ++i;
    }
  }
  return current;
}

Ontology oneJustification(const Ontology& o, const Axiom& goal) {
  return oneJustification(o, goal, tableauOracle());
}

}  // namespace dlproof
