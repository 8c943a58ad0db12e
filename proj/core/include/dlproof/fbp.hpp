#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlproof/forgetting.hpp"
#include "dlproof/proofs.hpp"

namespace dlproof {

enum class FbpMethod { Heur, Symb, Size, SizeWeighted };

const char* methodName(FbpMethod m);
std::optional<FbpMethod> parseFbpMethod(std::string_view s);

struct FbpTask {
  Ontology ontology;
  Axiom goal = Axiom::inclusion(Concept::top(), Concept::top());  // atomic CI
  FbpMethod method = FbpMethod::Heur;
  std::chrono::milliseconds perForgetTimeout = kDefaultForgettingTimeout;
  std::chrono::milliseconds overallBudget{300000};
  // Initial bound n of the size-optimizing search.
  std::int64_t sizeBound = 1000000;
};

struct FbpStep {
  std::string forgotten;
  bool role = false;
  Ontology before;
  Ontology after;
  // Forgetting failed; `after` equals `before`.
  bool skipped = false;
};

struct FbpStats {
  int forgettingCalls = 0;
  int failures = 0;
  std::int64_t elapsedMs = 0;
};

struct FbpTrace {
  std::vector<FbpStep> steps;
  // Names eliminated by the optimizing search before the heuristic completes
  // the proof (SYMB); equal to the number of successful steps otherwise.
  std::size_t searchLength = 0;
  FbpStats stats;
};

struct FbpResult {
  Proof proof;
  FbpTrace trace;
};

// Step-wise forgetting of all names but the goal's, keeping a justification
// of the goal after every step. The next name is the one with the fewest
// occurrences in the current justification, ties broken by name. Failed
// names are skipped. Every axiom new in step i is concluded by a Forget step
// from its justification in the previous set; a closing step derives the
// goal when it is not itself in the last set.
//
// Throws NotEntailed, BudgetExceeded, and Error for non-atomic goals.
FbpResult heurProof(const FbpTask& t);

// Search over concept-name elimination orders for the fewest forgotten
// names; the heuristic method then eliminates any remaining role names.
FbpResult symbProof(const FbpTask& t);

// Recursive branch-and-bound over concept-name eliminations for the smallest
// proof (tree size, or weighted size for SizeWeighted). Throws
// NoProofWithinBound when no proof fits `sizeBound`.
FbpResult sizeProof(const FbpTask& t);

// Dispatches on t.method.
FbpResult fbpProof(const FbpTask& t);

}  // namespace dlproof
