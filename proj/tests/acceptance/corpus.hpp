#pragma once

// ALCH justification patterns for end-to-end checks: the hand-written files
// under fixtures/patterns plus patterns mined from seeded random ontologies.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dlproof/bench.hpp"
#include "dlproof/error.hpp"
#include "dlproof/syntax.hpp"
#include "oracles/random_ontology.hpp"

namespace dlproof::testing {

struct PatternCase {
  std::string name;
  Ontology axioms;
  Axiom goal;
};

// "# goal: <axiom>" on the first line, axioms after it.
inline PatternCase loadPattern(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  std::string text = s.str();
  const std::string tag = "# goal:";
  auto at = text.find(tag);
  if (at == std::string::npos) throw Error("pattern file without goal: " + file.string());
  auto end = text.find('\n', at);
  Axiom goal = parseAxiom(text.substr(at + tag.size(), end - at - tag.size()));
  return {file.stem().string(), parseOntology(text, file.stem().string()), goal};
}

inline std::vector<PatternCase> patternCorpus(const std::filesystem::path& fixtureDir,
                                              std::size_t generated = 36) {
  std::vector<PatternCase> out;
  std::set<CanonicalPattern> seen;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(fixtureDir / "patterns")) {
    if (e.path().extension() == ".ofn") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    PatternCase c = loadPattern(f);
    seen.insert(canonicalPattern(c.goal, c.axioms));
    out.push_back(std::move(c));
  }

  std::mt19937 rng(5151);
  auto vocab = Vocabulary::make(5, 2);
  MiningOptions opts;
  opts.requireNonElh = true;
  opts.justificationBound = 4;
  std::size_t added = 0;
  for (int attempt = 0; attempt < 2000 && added < generated; ++attempt) {
    Ontology o = randomOntology(rng, vocab, 6, 1, true);
    for (const auto& p : minePatterns(o, opts).patterns) {
      if (added >= generated || p.axioms.size() > 6) continue;
      if (!seen.insert(p.pattern).second) continue;
      out.push_back({"gen" + std::to_string(added++), p.axioms, p.goal});
    }
  }
  return out;
}

}  // namespace dlproof::testing
