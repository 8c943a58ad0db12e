#include <random>

#include "doctest.h"
#include "dlproof/error.hpp"
#include "dlproof/proofs.hpp"
#include "dlproof/syntax.hpp"
#include "dlproof/tableau.hpp"
#include "oracles/proof_enum.hpp"
#include "oracles/random_ontology.hpp"

using namespace dlproof;

namespace {

Axiom ax(const char* text) { return parseAxiom(text); }

Signature names(std::initializer_list<const char*> cs, std::initializer_list<const char*> rs = {}) {
  Signature s;
  for (auto c : cs) s.concepts.insert(ConceptName(c));
  for (auto r : rs) s.roles.insert(RoleName(r));
  return s;
}

void checkSteps(const Proof& p) {
  for (const auto& s : p.steps()) {
    Ontology premises;
    for (auto q : s.premises) premises.insert(p.vertices()[q].axiom);
    CHECK_MESSAGE(entails(premises, p.vertices()[s.conclusion].axiom), s.rule.str());
  }
}

}  // namespace

TEST_CASE("chain proof") {
  Ontology o = parseOntology("SubClassOf(A B) SubClassOf(B C)");
  auto d = saturate(o);
  Proof p = extractOptimalProof(d, ax("SubClassOf(A C)"), Measure::TreeSize);
  CHECK(p.size() == 3);
  CHECK(evaluateMeasure(p, Measure::TreeSize) == 3);
  CHECK(evaluateMeasure(p, Measure::Depth) == 1);
  CHECK(p.root().kind == VertexKind::Conclusion);
  CHECK(p.vertices()[1].kind == VertexKind::Asserted);
  CHECK(p.vertices()[2].kind == VertexKind::Asserted);
  CHECK(structuralErrors(p, &o).empty());
  checkSteps(p);
}

TEST_CASE("known signature covering the goal gives a single vertex") {
  Ontology o = parseOntology("SubClassOf(A B) SubClassOf(B C)");
  Signature known = names({"A", "B", "C"});
  Proof p = extractOptimalProof(saturate(o), ax("SubClassOf(A C)"), Measure::TreeSize, known);
  CHECK(p.size() == 1);
  CHECK(p.root().kind == VertexKind::Known);
  CHECK(evaluateMeasure(p, Measure::TreeSize) == 1);
  CHECK(structuralErrors(p, &o, &known).empty());
}

TEST_CASE("the cheaper of two derivations wins") {
  DerivationStructure d;
  auto asserted = [&](const char* t) {
    auto v = d.addVertex(ax(t));
    d.addEdge({}, v, InferenceRule::of(RuleId::Asserted));
    return v;
  };
  auto g = d.addVertex(ax("SubClassOf(A G)"));
  auto p1 = asserted("SubClassOf(A P)");
  auto p2 = asserted("SubClassOf(P G)");
  auto q = d.addVertex(ax("SubClassOf(A Q)"));
  auto r1 = asserted("SubClassOf(A R)");
  auto r2 = asserted("SubClassOf(R S)");
  auto r3 = asserted("SubClassOf(S Q)");
  d.addEdge({q}, g, InferenceRule::of(RuleId::Hier));
  d.addEdge({r1, r2, r3}, q, InferenceRule::of(RuleId::Hier));
  d.addEdge({p1, p2}, g, InferenceRule::of(RuleId::Hier));
  Proof p = extractOptimalProof(d, ax("SubClassOf(A G)"), Measure::TreeSize);
  CHECK(evaluateMeasure(p, Measure::TreeSize) == 3);
  testing::ProofEnumerator oracle(d, Measure::TreeSize, {});
  CHECK(oracle.minimum(g) == 3);
}

TEST_CASE("measures on hand-built proofs") {
  Proof leaf;
  leaf.addVertex(ax("SubClassOf(A B)"), VertexKind::Asserted);
  CHECK(evaluateMeasure(leaf, Measure::TreeSize) == 1);
  CHECK(evaluateMeasure(leaf, Measure::Depth) == 0);
  CHECK(evaluateMeasure(leaf, Measure::WeightedSize) == 3);

  Proof chain;
  auto top = chain.addVertex(ax("SubClassOf(A ObjectIntersectionOf(B C))"), VertexKind::Conclusion);
  auto mid = chain.addVertex(ax("SubClassOf(A ObjectIntersectionOf(B C D))"), VertexKind::Inferred);
  auto bot = chain.addVertex(ax("SubClassOf(A ObjectIntersectionOf(B C D E))"), VertexKind::Asserted);
  chain.addStep({mid}, top, InferenceRule::of(RuleId::AndMinus));
  chain.addStep({bot}, mid, InferenceRule::of(RuleId::AndMinus));
  CHECK(evaluateMeasure(chain, Measure::Depth) == 2);
  CHECK(evaluateMeasure(chain, Measure::TreeSize) == 3);
  CHECK(evaluateMeasure(chain, Measure::WeightedSize) == 5 + 7 + 9);
  CHECK(structuralErrors(chain).empty());
}

TEST_CASE("signature coverage") {
  Proof p;
  p.addVertex(ax("SubClassOf(A ObjectSomeValuesFrom(r B))"), VertexKind::Asserted);
  CHECK(signatureCoverage(p, names({"A", "B"})) == doctest::Approx(2.0 / 3.0));
  CHECK(signatureCoverage(p, names({"A", "B", "C"}, {"r"})) == 1.0);
  CHECK(signatureCoverage(p, names({"X"})) == 0.0);
}

TEST_CASE("structural validation catches broken shapes") {
  Proof p;
  auto root = p.addVertex(ax("SubClassOf(A C)"), VertexKind::Conclusion);
  auto a = p.addVertex(ax("SubClassOf(A B)"), VertexKind::Inferred);
  p.addStep({a}, root, InferenceRule::of(RuleId::Hier));
  CHECK_FALSE(structuralErrors(p).empty());

  Proof q;
  q.addVertex(ax("SubClassOf(A C)"), VertexKind::Asserted);
  q.addVertex(ax("SubClassOf(A B)"), VertexKind::Asserted);
  CHECK_FALSE(structuralErrors(q).empty());

  Ontology o = parseOntology("SubClassOf(X Y)");
  CHECK_FALSE(structuralErrors(q, &o).empty());
}

TEST_CASE("underivable goals") {
  auto d = saturate(parseOntology("SubClassOf(A B)"));
  CHECK_THROWS_AS(extractOptimalProof(d, ax("SubClassOf(B A)"), Measure::TreeSize), NotDerivable);
  DerivationStructure lone;
  lone.addVertex(ax("SubClassOf(A B)"));
  CHECK_THROWS_AS(extractOptimalProof(lone, ax("SubClassOf(A B)"), Measure::TreeSize), NotDerivable);
  // A vertex reachable only through itself is not derivable, so it is never known.
  auto v = lone.addVertex(ax("SubClassOf(A C)"));
  lone.addEdge({v}, 0, InferenceRule::of(RuleId::Hier));
  CHECK_THROWS_AS(extractOptimalProof(lone, ax("SubClassOf(A B)"), Measure::TreeSize, names({"A", "B"})),
                  NotDerivable);
}

TEST_CASE("proof JSON") {
  Ontology o = parseOntology("SubClassOf(A B) SubClassOf(B C)");
  Proof p = extractOptimalProof(saturate(o), ax("SubClassOf(A C)"), Measure::TreeSize);
  auto j = proofToJson(p, "p1", "elk-minimal", names({"A"}));
  CHECK(j["id"] == "p1");
  CHECK(j["goal"] == "SubClassOf(A C)");
  CHECK(j["method"] == "elk-minimal");
  CHECK(j["measures"]["treeSize"] == 3);
  CHECK(j["measures"]["depth"] == 1);
  CHECK(j["measures"]["weightedSize"] == 9);
  CHECK(j["coveragePct"].get<double>() == doctest::Approx(100.0 / 3.0));
  REQUIRE(j["nodes"].size() == 3);
  CHECK(j["nodes"][0]["kind"] == "conclusion");
  CHECK(j["nodes"][0]["pretty"] == "A ⊑ C");
  REQUIRE(j["inferences"].size() == 1);
  CHECK(j["inferences"][0]["rule"] == "R-Hier");
  CHECK(j["inferences"][0]["conclusion"] == "n0");
  CHECK(j["inferences"][0]["premises"] == nlohmann::json::array({"n1", "n2"}));
}

TEST_CASE("property: optimal against exhaustive enumeration") {
  std::mt19937 rng(211);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    auto d = testing::randomStructure(rng, 10);
    Signature known;
    if (i % 3 == 0) known = names({"A0", "B0", "B1"});
    for (Measure m : {Measure::TreeSize, Measure::Depth, Measure::WeightedSize}) {
      testing::ProofEnumerator oracle(d, m, known);
      for (std::size_t v = 0; v < d.size(); ++v) {
        auto expected = oracle.minimum(v);
        if (!expected) {
          CHECK_THROWS_AS(extractOptimalProof(d, d.label(v), m, known), NotDerivable);
          continue;
        }
        Proof p = extractOptimalProof(d, d.label(v), m, known);
        CHECK(evaluateMeasure(p, m) == *expected);
        CHECK(structuralErrors(p, nullptr, &known).empty());
        ++compared;
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("property: condensation never grows proofs and known leaves are entailed") {
  std::mt19937 rng(223);
  auto vocab = testing::Vocabulary::make(6, 2);
  for (int i = 0; i < 40; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 12, 2, false);
    auto d = saturate(o);
    Signature known;
    for (auto c : vocab.concepts) {
      if (testing::uniform(rng, 0, 1)) known.concepts.insert(c);
    }
    for (const auto& goal : entailedAtomicCIs(d, o)) {
      Proof plain = extractOptimalProof(d, goal, Measure::TreeSize);
      Proof condensed = extractOptimalProof(d, goal, Measure::TreeSize, known);
      CHECK(evaluateMeasure(condensed, Measure::TreeSize) <= evaluateMeasure(plain, Measure::TreeSize));
      CHECK(structuralErrors(plain, &o).empty());
      CHECK(structuralErrors(condensed, &o, &known).empty());
      checkSteps(plain);
      for (const auto& v : condensed.vertices()) {
        if (v.kind == VertexKind::Known) CHECK(entails(o, v.axiom));
      }
    }
  }
}

TEST_CASE("property: extraction is deterministic") {
  std::mt19937 rng(227);
  auto vocab = testing::Vocabulary::make(5, 2);
  for (int i = 0; i < 20; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 10, 2, false);
    auto d1 = saturate(o);
    auto d2 = saturate(o);
    for (const auto& goal : entailedAtomicCIs(d1, o)) {
      auto a = proofToJson(extractOptimalProof(d1, goal, Measure::WeightedSize), "x", "m", {});
      auto b = proofToJson(extractOptimalProof(d2, goal, Measure::WeightedSize), "x", "m", {});
      CHECK(a.dump() == b.dump());
    }
  }
}
