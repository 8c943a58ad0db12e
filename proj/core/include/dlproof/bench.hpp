#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dlproof/fbp.hpp"
#include "dlproof/ontology.hpp"
#include "dlproof/pattern.hpp"

namespace dlproof {

struct ProofTask {
  std::string id;
  std::string ontologyRef;
  Axiom goal;
  std::optional<std::string> signatureRef;
};

// Entailed atomic CIs A⊑B (A ≠ B) of an ELH ontology. With a signature, only
// goals whose minimal proof uses at least `minSymbols` of its names are kept.
// At most `sampleSize` tasks are drawn, uniformly and reproducibly from
// `seed`, keeping enumeration order. Throws FragmentError outside ELH.
std::vector<ProofTask> extractTasks(const Ontology& o, const std::optional<Signature>& s,
                                    int minSymbols, std::size_t sampleSize, std::uint64_t seed);

enum class RowStatus { Ok, Timeout, Failed };

const char* statusName(RowStatus s);

struct ResultRow {
  std::string taskId;
  std::string method;
  RowStatus status = RowStatus::Failed;
  std::int64_t originalSize = 0;
  std::optional<std::int64_t> condensedSize;
  std::optional<double> sizeRatio;
  std::int64_t depth = 0;
  std::int64_t weightedSize = 0;
  std::optional<double> coveragePct;
  std::int64_t elapsedMs = 0;
};

// Minimal tree-size proofs of each task without and with `s` as known
// signature. Coverage is that of the original proof. Errors become failed rows.
std::vector<ResultRow> runCondensation(const Ontology& o, const std::vector<ProofTask>& tasks,
                                       const Signature& s);

struct MiningOptions {
  // Justifications collected per goal; the union is exact only when the goal
  // has at most this many.
  std::size_t justificationBound = 8;
  // Keep only patterns with an axiom outside ELH.
  bool requireNonElh = false;
};

struct MinedPattern {
  CanonicalPattern pattern;
  std::size_t frequency = 0;
  // First occurrence, with the original names.
  Axiom goal;
  Ontology axioms;
};

struct MiningReport {
  std::vector<MinedPattern> patterns;  // by descending frequency, then text
  std::size_t goals = 0;
  std::size_t exhausted = 0;
};

// Groups the entailed atomic CIs of an ALCH ontology by the canonical form of
// (goal, union of justifications).
MiningReport minePatterns(const Ontology& o, const MiningOptions& opts = {});

struct ComparisonOptions {
  std::chrono::milliseconds perForgetTimeout = kDefaultForgettingTimeout;
  std::chrono::milliseconds budget{300000};
};

// One row per pattern and method. Timeouts and failures report size 0.
std::vector<ResultRow> runFbpComparison(const std::vector<MinedPattern>& patterns,
                                        const std::vector<FbpMethod>& methods,
                                        const ComparisonOptions& opts = {});

extern const char* const kCsvHeader;

// With `timings` off, elapsed_ms is written as 0 so output is reproducible.
void writeCsv(std::ostream& out, const std::vector<ResultRow>& rows, bool timings = true);
void writeCsv(const std::filesystem::path& file, const std::vector<ResultRow>& rows,
              bool timings = true);

}  // namespace dlproof
