#include <random>

#include "doctest.h"
#include "dlproof/error.hpp"
#include "dlproof/justify.hpp"
#include "dlproof/syntax.hpp"
#include "oracles/random_ontology.hpp"

using namespace dlproof;

namespace {

void checkMinimal(const Ontology& j, const Axiom& goal) {
  CHECK(entails(j, goal));
  for (std::size_t i = 0; i < j.size(); ++i) CHECK_FALSE(entails(j.without(i), goal));
}

// Minimal entailing subsets by enumeration.
std::vector<std::string> minimalSubsets(const Ontology& o, const Axiom& goal) {
  std::vector<Ontology> entailing;
  for (unsigned mask = 0; mask < (1u << o.size()); ++mask) {
    Ontology s;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (mask & (1u << i)) s.insert(o.axioms()[i]);
    }
    if (entails(s, goal)) entailing.push_back(s);
  }
  std::vector<std::string> out;
  for (const auto& s : entailing) {
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      if (entails(s.without(i), goal)) minimal = false;
    }
    if (minimal) out.push_back(s.setKey());
  }
  return out;
}

}  // namespace

TEST_CASE("deletion order keeps the direct axiom") {
  Ontology o = parseOntology(
      "SubClassOf(A B) SubClassOf(B C) SubClassOf(A C) SubClassOf(D E)");
  Axiom goal = parseAxiom("SubClassOf(A C)");
  Ontology j = oneJustification(o, goal);
  REQUIRE(j.size() == 1);
  CHECK(j.axioms()[0] == goal);
  auto mins = minimalSubsets(o, goal);
  CHECK(std::find(mins.begin(), mins.end(), j.setKey()) != mins.end());
  CHECK(mins.size() == 2);
}

TEST_CASE("singleton and chain") {
  Axiom ab = parseAxiom("SubClassOf(A B)");
  CHECK(oneJustification(parseOntology("SubClassOf(A B)"), ab).size() == 1);
  Ontology chain = parseOntology("SubClassOf(A B) SubClassOf(B C)");
  CHECK(oneJustification(chain, parseAxiom("SubClassOf(A C)")).setKey() == chain.setKey());
}

TEST_CASE("not entailed") {
  CHECK_THROWS_AS(oneJustification(parseOntology("SubClassOf(A B)"), parseAxiom("SubClassOf(B A)")),
                  NotEntailed);
}

TEST_CASE("custom oracle is used") {
  int calls = 0;
  EntailmentOracle counting = [&](const Ontology& o, const Axiom& a) {
    ++calls;
    return entails(o, a);
  };
  oneJustification(parseOntology("SubClassOf(A B) SubClassOf(B C)"), parseAxiom("SubClassOf(A C)"),
                   counting);
  CHECK(calls == 3);
}

TEST_CASE("property: minimal, valid and deterministic on random ALCH inputs") {
  std::mt19937 rng(8);
  auto vocab = testing::Vocabulary::make(4, 2);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 60; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 8, 2, true);
    Axiom goal = Axiom::inclusion(Concept::atomic(vocab.concepts[0]),
                                  Concept::atomic(vocab.concepts[1]));
    if (!entails(o, goal)) continue;
    ++checked;
    Ontology j1 = oneJustification(o, goal);
    Ontology j2 = oneJustification(o, goal);
    checkMinimal(j1, goal);
    REQUIRE(j1.size() == j2.size());
    for (std::size_t k = 0; k < j1.size(); ++k) CHECK(j1.axioms()[k] == j2.axioms()[k]);
  }
  CHECK(checked >= 20);
}
