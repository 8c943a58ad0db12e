#include "dlproof/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "dlproof/elh.hpp"
#include "dlproof/error.hpp"
#include "dlproof/justify.hpp"
#include "dlproof/proofs.hpp"
#include "dlproof/tableau.hpp"

namespace dlproof {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t msSince(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t).count();
}

}  // namespace

std::vector<ProofTask> extractTasks(const Ontology& o, const std::optional<Signature>& s,
                                    int minSymbols, std::size_t sampleSize, std::uint64_t seed) {
  if (minSymbols < 0) throw Error("minSymbols must not be negative");
  DerivationStructure d = saturate(o);
  std::vector<Axiom> goals;
  for (const auto& g : entailedAtomicCIs(d, o)) {
    if (s) {
      Proof p = extractOptimalProof(d, g, Measure::TreeSize);
      if (signatureOf(p).intersect(*s).size() < static_cast<std::size_t>(minSymbols)) continue;
    }
    goals.push_back(g);
  }
  std::vector<Axiom> picked;
  std::mt19937_64 rng(seed);
  std::sample(goals.begin(), goals.end(), std::back_inserter(picked), sampleSize, rng);
  std::vector<ProofTask> tasks;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    tasks.push_back({"t" + std::to_string(i), o.name(), picked[i],
                     s ? std::optional<std::string>("signature") : std::nullopt});
  }
  return tasks;
}

const char* statusName(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Timeout: return "timeout";
    case RowStatus::Failed: return "failed";
  }
  return "";
}

std::vector<ResultRow> runCondensation(const Ontology& o, const std::vector<ProofTask>& tasks,
                                       const Signature& s) {
  std::vector<ResultRow> rows;
  std::optional<DerivationStructure> d;
  std::string setupError;
  try {
    d = saturate(o);
  } catch (const Error& e) {
    setupError = e.what();
  }
  for (const auto& t : tasks) {
    ResultRow row;
    row.taskId = t.id;
    row.method = "condense";
    auto start = Clock::now();
    if (d) {
      try {
        Proof original = extractOptimalProof(*d, t.goal, Measure::TreeSize);
        Proof condensed = extractOptimalProof(*d, t.goal, Measure::TreeSize, s);
        row.originalSize = evaluateMeasure(original, Measure::TreeSize);
        row.condensedSize = evaluateMeasure(condensed, Measure::TreeSize);
        row.sizeRatio = static_cast<double>(*row.condensedSize) / static_cast<double>(row.originalSize);
        row.depth = evaluateMeasure(original, Measure::Depth);
        row.weightedSize = evaluateMeasure(original, Measure::WeightedSize);
        row.coveragePct = 100.0 * signatureCoverage(original, s);
        row.status = RowStatus::Ok;
      } catch (const Error&) {
        row.status = RowStatus::Failed;
      }
    }
    row.elapsedMs = msSince(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Union of up to `bound` justifications, found by a breadth-first
// hitting-set search: each justification spawns one restart per axiom with
// that axiom removed.
Ontology justificationUnion(const Ontology& o, const Axiom& goal, std::size_t bound) {
  std::set<std::string> found;
  std::set<std::set<std::string>> seen;
  std::deque<std::set<std::string>> queue{{}};
  Ontology u;
  std::size_t explored = 0;
  while (!queue.empty() && found.size() < bound && explored < 16 * bound) {
    std::set<std::string> removed = queue.front();
    queue.pop_front();
    ++explored;
    Ontology rest = o.filtered([&](const Axiom& a) { return !removed.count(a.key()); });
    if (!entails(rest, goal)) continue;
    Ontology j = oneJustification(rest, goal);
    found.insert(j.setKey());
    for (const auto& a : j) {
      u.insert(a);
      auto next = removed;
      next.insert(a.key());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  // Keep the ontology's axiom order.
  return o.filtered([&](const Axiom& a) { return u.contains(a); });
}

}  // namespace

MiningReport minePatterns(const Ontology& o, const MiningOptions& opts) {
  MiningReport report;
  std::map<CanonicalPattern, std::size_t> index;
  Signature sig = signatureOf(o);
  for (auto a : sig.concepts) {
    for (auto b : sig.concepts) {
      if (a == b) continue;
      Axiom goal = Axiom::inclusion(Concept::atomic(a), Concept::atomic(b));
      try {
        if (!entails(o, goal)) continue;
        ++report.goals;
        Ontology u = justificationUnion(o, goal, opts.justificationBound);
        if (opts.requireNonElh &&
            std::none_of(u.begin(), u.end(), [](const Axiom& x) { return fragmentOf(x) != Fragment::ELH; })) {
          continue;
        }
        CanonicalPattern p = canonicalPattern(goal, u);
        auto [it, fresh] = index.emplace(p, report.patterns.size());
        if (fresh) {
          report.patterns.push_back({p, 1, goal, u});
        } else {
          ++report.patterns[it->second].frequency;
        }
      } catch (const ResourceExhausted&) {
        ++report.exhausted;
      }
    }
  }
  std::stable_sort(report.patterns.begin(), report.patterns.end(),
                   [](const MinedPattern& x, const MinedPattern& y) {
                     if (x.frequency != y.frequency) return x.frequency > y.frequency;
                     return x.pattern < y.pattern;
                   });
  return report;
}

std::vector<ResultRow> runFbpComparison(const std::vector<MinedPattern>& patterns,
                                        const std::vector<FbpMethod>& methods,
                                        const ComparisonOptions& opts) {
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (auto m : methods) {
      ResultRow row;
      row.taskId = "p" + std::to_string(i);
      row.method = methodName(m);
      FbpTask t;
      t.ontology = patterns[i].axioms;
      t.goal = patterns[i].goal;
      t.method = m;
      t.perForgetTimeout = opts.perForgetTimeout;
      t.overallBudget = opts.budget;
      auto start = Clock::now();
      try {
        FbpResult r = fbpProof(t);
        row.originalSize = evaluateMeasure(r.proof, Measure::TreeSize);
        row.depth = evaluateMeasure(r.proof, Measure::Depth);
        row.weightedSize = evaluateMeasure(r.proof, Measure::WeightedSize);
        row.status = RowStatus::Ok;
      } catch (const BudgetExceeded&) {
        row.status = RowStatus::Timeout;
      } catch (const Error&) {
        row.status = RowStatus::Failed;
      }
      row.elapsedMs = msSince(start);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

const char* const kCsvHeader =
    "task_id,method,status,original_size,condensed_size,size_ratio,depth,weighted_size,coverage_pct,"
    "elapsed_ms";

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void writeCsv(std::ostream& out, const std::vector<ResultRow>& rows, bool timings) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.taskId << ',' << r.method << ',' << statusName(r.status) << ',' << r.originalSize << ','
        << (r.condensedSize ? std::to_string(*r.condensedSize) : "") << ','
        << (r.sizeRatio ? fixed(*r.sizeRatio, 6) : "") << ',' << r.depth << ',' << r.weightedSize
        << ',' << (r.coveragePct ? fixed(*r.coveragePct, 2) : "") << ','
        << (timings ? r.elapsedMs : 0) << '\n';
  }
}

void writeCsv(const std::filesystem::path& file, const std::vector<ResultRow>& rows, bool timings) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  writeCsv(out, rows, timings);
}

}  // namespace dlproof
