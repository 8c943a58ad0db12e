#include <algorithm>
#include <random>

#include "doctest.h"
#include "dlproof/error.hpp"
#include "dlproof/fbp.hpp"
#include "dlproof/justify.hpp"
#include "dlproof/syntax.hpp"
#include "dlproof/tableau.hpp"
#include "oracles/random_ontology.hpp"

using namespace dlproof;

namespace {

Axiom ax(const char* text) { return parseAxiom(text); }

FbpTask task(const char* ontology, const char* goal, FbpMethod m) {
  FbpTask t;
  t.ontology = parseOntology(ontology);
  t.goal = ax(goal);
  t.method = m;
  return t;
}

// Every step sound, leaves asserted in the input, root is the goal.
void checkProof(const Proof& p, const FbpTask& t) {
  CHECK(p.root().axiom == t.goal);
  CHECK(structuralErrors(p, &t.ontology).empty());
  for (const auto& s : p.steps()) {
    Ontology premises;
    for (auto q : s.premises) premises.insert(p.vertices()[q].axiom);
    CHECK_MESSAGE(entails(premises, p.vertices()[s.conclusion].axiom),
                  render(p.vertices()[s.conclusion].axiom, RenderStyle::Pretty));
  }
}

std::size_t conceptNamesBesides(const Ontology& o, const Axiom& goal) {
  Signature sig = signatureOf(o);
  sig.concepts.erase(goal.lhs().name());
  sig.concepts.erase(goal.rhs().name());
  return sig.concepts.size();
}

// Best (remaining names, forgotten names) over every concept-name elimination
// order, forgetting failures excluded.
std::pair<std::size_t, std::size_t> bruteForceSymb(const Ontology& j, const Axiom& goal,
                                                   std::size_t forgotten) {
  std::pair<std::size_t, std::size_t> best{conceptNamesBesides(j, goal), forgotten};
  for (auto c : signatureOf(j).concepts) {
    if (c == goal.lhs().name() || c == goal.rhs().name()) continue;
    auto r = forgetConceptName(j, c);
    if (!succeeded(r)) continue;
    Ontology next;
    try {
      next = oneJustification(std::get<Ontology>(r), goal);
    } catch (const NotEntailed&) {
      continue;
    }
    best = std::min(best, bruteForceSymb(next, goal, forgotten + 1));
  }
  return best;
}

std::size_t forgottenCount(const FbpTrace& t) {
  return static_cast<std::size_t>(
      std::count_if(t.steps.begin(), t.steps.end(), [](const FbpStep& s) { return !s.skipped; }));
}

// Smallest subset of o entailing the goal, by exhaustive search.
std::size_t smallestJustification(const Ontology& o, const Axiom& goal) {
  std::vector<Axiom> axioms(o.begin(), o.end());
  std::size_t best = axioms.size();
  for (std::uint32_t mask = 0; mask < (1u << axioms.size()); ++mask) {
    auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    Ontology sub;
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (mask & (1u << i)) sub.insert(axioms[i]);
    }
    if (entails(sub, goal)) best = k;
  }
  return best;
}

}  // namespace

TEST_CASE("method names") {
  for (auto m : {FbpMethod::Heur, FbpMethod::Symb, FbpMethod::Size, FbpMethod::SizeWeighted}) {
    CHECK(parseFbpMethod(methodName(m)) == m);
  }
  CHECK_FALSE(parseFbpMethod("elk"));
}

TEST_CASE("HEUR on a chain forgets the middle name") {
  auto t = task("SubClassOf(A B) SubClassOf(B C)", "SubClassOf(A C)", FbpMethod::Heur);
  auto r = heurProof(t);
  CHECK(evaluateMeasure(r.proof, Measure::TreeSize) == 3);
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].forgotten == "B");
  CHECK_FALSE(r.trace.steps[0].skipped);
  CHECK(r.proof.steps()[0].rule.str() == "Forget(B)");
  checkProof(r.proof, t);
}

TEST_CASE("asserted goals give single-vertex proofs") {
  for (auto m : {FbpMethod::Heur, FbpMethod::Symb, FbpMethod::Size}) {
    auto t = task("SubClassOf(A C)", "SubClassOf(A C)", m);
    auto r = fbpProof(t);
    CHECK(r.proof.size() == 1);
    CHECK(r.proof.root().kind == VertexKind::Asserted);
    CHECK(forgottenCount(r.trace) == 0);
  }
}

TEST_CASE("HEUR passes through an unsatisfiable intermediate") {
  auto t = task(
      "SubClassOf(C ObjectSomeValuesFrom(r D)) "
      "SubClassOf(C ObjectAllValuesFrom(r ObjectComplementOf(D))) "
      "SubClassOf(owl:Nothing E)",
      "SubClassOf(C E)", FbpMethod::Heur);
  auto r = heurProof(t);
  REQUIRE_FALSE(r.trace.steps.empty());
  CHECK(r.trace.steps[0].forgotten == "D");
  CHECK(r.trace.steps[0].after.contains(ax("SubClassOf(C owl:Nothing)")));
  bool sawBottom = false;
  for (const auto& v : r.proof.vertices()) sawBottom = sawBottom || v.axiom == ax("SubClassOf(C owl:Nothing)");
  CHECK(sawBottom);
  checkProof(r.proof, t);
}

TEST_CASE("non-entailed and non-atomic goals") {
  CHECK_THROWS_AS(heurProof(task("SubClassOf(A B)", "SubClassOf(B A)", FbpMethod::Heur)), NotEntailed);
  CHECK_THROWS_AS(heurProof(task("SubClassOf(A B)", "SubClassOf(A ObjectIntersectionOf(B B2))",
                                 FbpMethod::Heur)),
                  Error);
}

TEST_CASE("zero budget") {
  for (auto m : {FbpMethod::Heur, FbpMethod::Symb, FbpMethod::Size}) {
    auto t = task("SubClassOf(A B) SubClassOf(B C)", "SubClassOf(A C)", m);
    t.overallBudget = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(fbpProof(t), BudgetExceeded);
  }
}

TEST_CASE("SYMB forgets one name when two chains exist") {
  auto t = task("SubClassOf(A B) SubClassOf(B C) SubClassOf(A D) SubClassOf(D C)", "SubClassOf(A C)",
                FbpMethod::Symb);
  auto r = symbProof(t);
  CHECK(forgottenCount(r.trace) == 1);
  CHECK(r.trace.searchLength == 1);
  checkProof(r.proof, t);
}

TEST_CASE("SYMB on a chain matches HEUR") {
  auto t = task("SubClassOf(A B) SubClassOf(B C)", "SubClassOf(A C)", FbpMethod::Symb);
  auto s = symbProof(t);
  t.method = FbpMethod::Heur;
  auto h = heurProof(t);
  REQUIRE(s.trace.steps.size() == 1);
  CHECK(s.trace.steps[0].forgotten == "B");
  CHECK(proofToJson(s.proof, "p", "m", {}).dump() == proofToJson(h.proof, "p", "m", {}).dump());
}

TEST_CASE("SYMB hands role names to the heuristic") {
  auto t = task("SubClassOf(A ObjectSomeValuesFrom(r B)) SubClassOf(ObjectSomeValuesFrom(r B) C)",
                "SubClassOf(A C)", FbpMethod::Symb);
  auto r = symbProof(t);
  checkProof(r.proof, t);
  for (const auto& s : r.trace.steps) {
    if (s.role) CHECK(s.forgotten == "r");
  }
}

TEST_CASE("SIZE examples") {
  auto single = task("SubClassOf(A B)", "SubClassOf(A B)", FbpMethod::Size);
  single.sizeBound = 5;
  CHECK(sizeProof(single).proof.size() == 1);

  single.sizeBound = 0;
  CHECK_THROWS_AS(sizeProof(single), NoProofWithinBound);

  auto chain = task("SubClassOf(A B) SubClassOf(B C)", "SubClassOf(A C)", FbpMethod::Size);
  chain.sizeBound = 2;
  CHECK_THROWS_AS(sizeProof(chain), NoProofWithinBound);
  chain.sizeBound = 3;
  CHECK(evaluateMeasure(sizeProof(chain).proof, Measure::TreeSize) == 3);
}

TEST_CASE("SIZE searches within the first justification") {
  // Linear deletion keeps the B⊓D family here; forgetting B or D from it
  // leaves a two-axiom intermediate, so 1 + 2 + 3 is the best possible.
  auto t = task(
      "SubClassOf(A B) SubClassOf(B C) "
      "SubClassOf(A ObjectIntersectionOf(B D)) SubClassOf(ObjectIntersectionOf(B D) C)",
      "SubClassOf(A C)", FbpMethod::Size);
  auto r = sizeProof(t);
  CHECK(evaluateMeasure(r.proof, Measure::TreeSize) == 6);
  checkProof(r.proof, t);
}

TEST_CASE("SIZE finds the size-3 chain among two families") {
  auto t = task(
      "SubClassOf(A ObjectIntersectionOf(B D)) SubClassOf(ObjectIntersectionOf(B D) C) "
      "SubClassOf(A B) SubClassOf(B C)",
      "SubClassOf(A C)", FbpMethod::Size);
  auto r = sizeProof(t);
  auto size = evaluateMeasure(r.proof, Measure::TreeSize);
  CHECK(size == 3);
  CHECK(size == 1 + static_cast<std::int64_t>(smallestJustification(t.ontology, t.goal)));
  checkProof(r.proof, t);

  t.method = FbpMethod::SizeWeighted;
  auto w = sizeProof(t);
  checkProof(w.proof, t);
  CHECK(evaluateMeasure(w.proof, Measure::WeightedSize) <= evaluateMeasure(r.proof, Measure::WeightedSize));
}

TEST_CASE("forgetting results are cached") {
  auto t = task("SubClassOf(A B) SubClassOf(B C) SubClassOf(A D) SubClassOf(D C)", "SubClassOf(A C)",
                FbpMethod::Size);
  auto r = sizeProof(t);
  CHECK(r.trace.stats.forgettingCalls >= 1);
  CHECK(r.trace.stats.forgettingCalls <= 4);
}

namespace {

struct Corpus {
  std::vector<FbpTask> tasks;
};

// Random ALC ontologies with their entailed non-trivial atomic goals.
Corpus randomCorpus(unsigned seed, int ontologies, int maxGoals) {
  std::mt19937 rng(seed);
  auto vocab = testing::Vocabulary::make(5, 1);
  Corpus c;
  for (int i = 0; i < ontologies; ++i) {
    Ontology o = testing::randomOntology(rng, vocab, 6, 1, true);
    int goals = 0;
    for (auto a : vocab.concepts) {
      for (auto b : vocab.concepts) {
        if (a == b || goals >= maxGoals) continue;
        Axiom g = Axiom::inclusion(Concept::atomic(a), Concept::atomic(b));
        if (o.contains(g) || !entails(o, g)) continue;
        if (!isSatisfiable(o, Concept::atomic(a))) continue;
        FbpTask t;
        t.ontology = o;
        t.goal = g;
        t.perForgetTimeout = std::chrono::milliseconds(500);
        c.tasks.push_back(t);
        ++goals;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("property: every method yields sound proofs") {
  auto corpus = randomCorpus(301, 60, 2);
  REQUIRE(corpus.tasks.size() >= 20);
  int dominated = 0;
  for (auto& t : corpus.tasks) {
    t.method = FbpMethod::Heur;
    auto h = heurProof(t);
    checkProof(h.proof, t);
    for (const auto& s : h.trace.steps) {
      if (s.skipped) {
        CHECK(s.after.setKey() == s.before.setKey());
      } else if (s.role) {
        CHECK_FALSE(signatureOf(s.after).roles.count(RoleName(s.forgotten)));
      } else {
        CHECK_FALSE(signatureOf(s.after).concepts.count(ConceptName(s.forgotten)));
      }
    }
    t.method = FbpMethod::Symb;
    checkProof(symbProof(t).proof, t);
    t.method = FbpMethod::Size;
    auto s = sizeProof(t);
    checkProof(s.proof, t);
    dominated += evaluateMeasure(s.proof, Measure::TreeSize) <= evaluateMeasure(h.proof, Measure::TreeSize);
  }
  CHECK(dominated * 10 >= static_cast<int>(corpus.tasks.size()) * 8);
}

TEST_CASE("property: SYMB forgets the brute-force minimum") {
  auto corpus = randomCorpus(307, 60, 2);
  int compared = 0;
  for (auto& t : corpus.tasks) {
    Ontology j = oneJustification(t.ontology, t.goal);
    if (conceptNamesBesides(j, t.goal) > 4) continue;
    t.method = FbpMethod::Symb;
    auto r = symbProof(t);
    auto [remaining, forgotten] = bruteForceSymb(j, t.goal, 0);
    CHECK(r.trace.searchLength == forgotten);
    const Ontology& searched =
        r.trace.searchLength == 0 ? j : r.trace.steps[r.trace.searchLength - 1].after;
    std::size_t left = conceptNamesBesides(searched, t.goal);
    CHECK(left == remaining);
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("property: SIZE never beats the justification lower bound and is deterministic") {
  auto corpus = randomCorpus(311, 40, 1);
  for (auto& t : corpus.tasks) {
    t.method = FbpMethod::Size;
    auto a = sizeProof(t);
    auto b = sizeProof(t);
    CHECK(proofToJson(a.proof, "p", "m", {}).dump() == proofToJson(b.proof, "p", "m", {}).dump());
    auto size = evaluateMeasure(a.proof, Measure::TreeSize);
    CHECK(size >= 1 + static_cast<std::int64_t>(smallestJustification(t.ontology, t.goal)));
  }
}
