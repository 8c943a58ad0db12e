#include <random>

#include "doctest.h"
#include "dlproof/elh.hpp"
#include "dlproof/error.hpp"
#include "dlproof/syntax.hpp"
#include "oracles/el_model.hpp"
#include "oracles/random_ontology.hpp"

using namespace dlproof;

namespace {

bool hasEdge(const DerivationStructure& d, const std::vector<std::string>& premises,
             const std::string& conclusion, RuleId rule) {
  auto c = d.find(parseAxiom(conclusion));
  if (!c) return false;
  std::vector<std::size_t> ps;
  for (const auto& p : premises) {
    auto v = d.find(parseAxiom(p));
    if (!v) return false;
    ps.push_back(*v);
  }
  std::sort(ps.begin(), ps.end());
  for (auto e : d.edgesInto(*c)) {
    if (d.edges()[e].rule.id == rule && d.edges()[e].premises == ps) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("transitivity edge") {
  auto d = saturate(parseOntology("SubClassOf(A B) SubClassOf(B C)"));
  CHECK(hasEdge(d, {"SubClassOf(A B)", "SubClassOf(B C)"}, "SubClassOf(A C)", RuleId::Hier));
}

TEST_CASE("empty ontology keeps only top tautologies") {
  auto d = saturate(Ontology{});
  REQUIRE(d.size() == 1);
  CHECK(d.label(0) == parseAxiom("SubClassOf(owl:Thing owl:Thing)"));
  for (const auto& e : d.edges()) CHECK(e.premises.empty());
}

TEST_CASE("existential propagation reaches A ⊑ D") {
  Ontology o = parseOntology(
      "SubClassOf(A ObjectSomeValuesFrom(r B)) SubClassOf(B C) "
      "SubClassOf(ObjectSomeValuesFrom(r C) D)");
  REQUIRE(testing::elEntails(o, parseAxiom("SubClassOf(A D)")));
  auto d = saturate(o);
  CHECK(d.find(parseAxiom("SubClassOf(A D)")));
  CHECK(hasEdge(d, {"SubClassOf(A ObjectSomeValuesFrom(r B))", "SubClassOf(B C)"},
                "SubClassOf(A ObjectSomeValuesFrom(r C))", RuleId::Exists));
}

TEST_CASE("role hierarchy is materialized") {
  Ontology o = parseOntology(
      "SubObjectPropertyOf(r s) SubObjectPropertyOf(s t) "
      "SubClassOf(A ObjectSomeValuesFrom(r B)) SubClassOf(ObjectSomeValuesFrom(t B) C)");
  auto d = saturate(o);
  CHECK(hasEdge(d, {"SubObjectPropertyOf(r s)", "SubObjectPropertyOf(s t)"},
                "SubObjectPropertyOf(r t)", RuleId::RoleHier));
  CHECK(hasEdge(d, {"SubClassOf(A ObjectSomeValuesFrom(r B))", "SubObjectPropertyOf(r t)"},
                "SubClassOf(A ObjectSomeValuesFrom(t B))", RuleId::Exists));
  CHECK(entailedAtomicCIs(o) == std::vector<Axiom>{parseAxiom("SubClassOf(A C)")});
}

TEST_CASE("conjunction rules") {
  Ontology o = parseOntology(
      "SubClassOf(A ObjectIntersectionOf(B C)) SubClassOf(ObjectIntersectionOf(B C) D)");
  auto d = saturate(o);
  CHECK(hasEdge(d, {"SubClassOf(A ObjectIntersectionOf(B C))"}, "SubClassOf(A B)",
                RuleId::AndMinus));
  CHECK(d.find(parseAxiom("SubClassOf(A D)")));
  Ontology o2 = parseOntology(
      "SubClassOf(A B) SubClassOf(A C) SubClassOf(ObjectIntersectionOf(B C) D)");
  auto d2 = saturate(o2);
  CHECK(hasEdge(d2, {"SubClassOf(A B)", "SubClassOf(A C)"},
                "SubClassOf(A ObjectIntersectionOf(B C))", RuleId::AndPlus));
}

TEST_CASE("atomic classification") {
  CHECK(entailedAtomicCIs(parseOntology("SubClassOf(A B) SubClassOf(B C)")) ==
        std::vector<Axiom>{parseAxiom("SubClassOf(A B)"), parseAxiom("SubClassOf(A C)"),
                           parseAxiom("SubClassOf(B C)")});
  CHECK(entailedAtomicCIs(parseOntology("SubClassOf(A ObjectSomeValuesFrom(r B))")).empty());
  auto withTaut = entailedAtomicCIs(parseOntology("SubClassOf(A B)"), true);
  CHECK(withTaut.size() == 3);
}

TEST_CASE("top on the left") {
  Ontology o = parseOntology("SubClassOf(owl:Thing B) SubClassOf(A C)");
  auto cis = entailedAtomicCIs(o);
  CHECK(std::find(cis.begin(), cis.end(), parseAxiom("SubClassOf(A B)")) != cis.end());
  CHECK(std::find(cis.begin(), cis.end(), parseAxiom("SubClassOf(C B)")) != cis.end());
}

TEST_CASE("non-ELH input is rejected") {
  CHECK_THROWS_AS(saturate(parseOntology("SubClassOf(A ObjectUnionOf(B C))")), FragmentError);
  CHECK_THROWS_AS(entailedAtomicCIs(parseOntology("SubClassOf(A owl:Nothing)")), FragmentError);
}

TEST_CASE("property: classification matches the canonical model") {
  std::mt19937 rng(2024);
  auto vocab = testing::Vocabulary::make(6, 2);
  for (int i = 0; i < 100; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 15, 2, false);
    CHECK(entailedAtomicCIs(o) == testing::elClassify(o));
  }
}

TEST_CASE("property: every hyperedge is sound") {
  std::mt19937 rng(99);
  auto vocab = testing::Vocabulary::make(5, 2);
  for (int i = 0; i < 40; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 10, 2, false);
    auto d = saturate(o);
    for (const auto& e : d.edges()) {
      Ontology premises;
      for (auto p : e.premises) premises.insert(d.label(p));
      if (e.rule.id == RuleId::Asserted) {
        CHECK(o.contains(d.label(e.conclusion)));
        continue;
      }
      CHECK(testing::elEntails(premises, d.label(e.conclusion)));
    }
  }
}

TEST_CASE("property: saturation is deterministic") {
  std::mt19937 rng(17);
  auto vocab = testing::Vocabulary::make(5, 2);
  for (int i = 0; i < 20; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 12, 2, false);
    auto d1 = saturate(o);
    auto d2 = saturate(o);
    REQUIRE(d1.size() == d2.size());
    REQUIRE(d1.edges().size() == d2.edges().size());
    for (std::size_t v = 0; v < d1.size(); ++v) CHECK(d1.label(v) == d2.label(v));
    for (std::size_t e = 0; e < d1.edges().size(); ++e) {
      CHECK(d1.edges()[e].premises == d2.edges()[e].premises);
      CHECK(d1.edges()[e].conclusion == d2.edges()[e].conclusion);
    }
  }
}
