#include "dlproof/fbp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dlproof/error.hpp"
#include "dlproof/justify.hpp"

namespace dlproof {

const char* methodName(FbpMethod m) {
  switch (m) {
    case FbpMethod::Heur: return "heur";
    case FbpMethod::Symb: return "symb";
    case FbpMethod::Size: return "size";
    case FbpMethod::SizeWeighted: return "size-weighted";
  }
  return "";
}

std::optional<FbpMethod> parseFbpMethod(std::string_view s) {
  if (s == "heur" || s == "HEUR") return FbpMethod::Heur;
  if (s == "symb" || s == "SYMB") return FbpMethod::Symb;
  if (s == "size" || s == "SIZE") return FbpMethod::Size;
  if (s == "size-weighted" || s == "SIZE_WEIGHTED") return FbpMethod::SizeWeighted;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

// A name to forget; concept names sort before role names of the same text.
struct Symbol {
  std::string name;
  bool role = false;

  friend auto operator<=>(const Symbol& a, const Symbol& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.role <=> b.role;
  }
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Tree {
  Axiom axiom;
  std::optional<InferenceRule> rule;
  std::vector<Tree> premises;
};

Tree leaf(const Axiom& a) { return {a, std::nullopt, {}}; }

std::int64_t measure(const Tree& t, Measure m) {
  std::int64_t own = m == Measure::WeightedSize ? symbolCount(t.axiom) : 1;
  std::int64_t sum = 0;
  std::int64_t deepest = 0;
  for (const auto& p : t.premises) {
    std::int64_t c = measure(p, m);
    sum += c;
    deepest = std::max(deepest, c);
  }
  if (m == Measure::Depth) return t.rule ? deepest + 1 : 0;
  return own + sum;
}

std::size_t emit(Proof& p, const Tree& t, bool root) {
  VertexKind kind = !t.rule ? VertexKind::Asserted
                            : (root ? VertexKind::Conclusion : VertexKind::Inferred);
  std::size_t self = p.addVertex(t.axiom, kind);
  if (t.rule) {
    std::vector<std::size_t> premises;
    for (const auto& q : t.premises) premises.push_back(emit(p, q, false));
    p.addStep(std::move(premises), self, *t.rule);
  }
  return self;
}

Proof toProof(const Tree& t) {
  Proof p;
  emit(p, t, true);
  return p;
}

int occurrences(const Concept& c, const Symbol& s) {
  int n = 0;
  if (!s.role && c.is(ConceptKind::Atomic) && c.name().str() == s.name) ++n;
  if (s.role && (c.is(ConceptKind::Exists) || c.is(ConceptKind::Forall)) && c.role().str() == s.name) {
    ++n;
  }
  for (const auto& op : c.operands()) n += occurrences(op, s);
  return n;
}

int occurrences(const Ontology& o, const Symbol& s) {
  int n = 0;
  for (const auto& a : o) {
    if (a.isRoleInclusion()) {
      n += s.role && a.sub().str() == s.name;
      n += s.role && a.sup().str() == s.name;
    } else {
      n += occurrences(a.lhs(), s) + occurrences(a.rhs(), s);
    }
  }
  return n;
}

std::int64_t weight(const Ontology& o, Measure m) {
  std::int64_t w = 0;
  for (const auto& a : o) w += m == Measure::WeightedSize ? symbolCount(a) : 1;
  return w;
}

// A forgetting result reduced to a justification of the goal.
struct Step {
  Symbol forgotten;
  Ontology after;
};

class Session {
 public:
  explicit Session(const FbpTask& t)
      : task_(t), start_(Clock::now()), end_(start_ + t.overallBudget) {
    const Axiom& g = t.goal;
    if (!g.isAtomicCI()) throw Error("forgetting-based proofs need an atomic goal, got " + g.key());
    a_ = g.lhs().name().str();
    b_ = g.rhs().name().str();
  }

  void checkBudget() const {
    if (Clock::now() >= end_) throw BudgetExceeded("proof search exceeded its budget");
  }

  const Axiom& goal() const { return task_.goal; }

  Ontology justify(const Ontology& o, const Axiom& a) {
    checkBudget();
    return oneJustification(o, a);
  }

  // Names of `o` other than the goal's, concepts only unless `roles`.
  std::vector<Symbol> names(const Ontology& o, bool roles) const {
    Signature sig = signatureOf(o);
    std::vector<Symbol> out;
    for (auto c : sig.concepts) {
      if (c.str() != a_ && c.str() != b_) out.push_back({c.str(), false});
    }
    if (roles) {
      for (auto r : sig.roles) out.push_back({r.str(), true});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Justification of the goal in o^{-x}, or nullopt if forgetting failed.
  std::optional<Ontology> forget(const Ontology& o, const Symbol& x) {
    std::string key = o.setKey() + (x.role ? "\nrole:" : "\nconcept:") + x.name;
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    checkBudget();
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(end_ - Clock::now());
    auto timeout = std::min(task_.perForgetTimeout, remaining);
    ++stats.forgettingCalls;
    ForgettingResult r = x.role ? forgetRoleName(o, RoleName(x.name), timeout)
                                : forgetConceptName(o, ConceptName(x.name), timeout);
    std::optional<Ontology> out;
    if (succeeded(r)) {
      const Ontology& result = std::get<Ontology>(r);
      try {
        out = justify(result, goal());
      } catch (const NotEntailed&) {
        out.reset();
      }
    } else {
      checkBudget();
    }
    if (!out) ++stats.failures;
    cache_.emplace(std::move(key), out);
    return out;
  }

  std::int64_t elapsedMs() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

  FbpStats stats;

 private:
  const FbpTask& task_;
  Clock::time_point start_;
  Clock::time_point end_;
  std::string a_;
  std::string b_;
  std::map<std::string, std::optional<Ontology>> cache_;
};

// Justifications J_0..J_n and the name forgotten between consecutive ones.
struct Sequence {
  std::vector<Ontology> sets;
  std::vector<Symbol> names;
  std::vector<bool> skipped;

  void push(Symbol x, Ontology next, bool failed) {
    names.push_back(std::move(x));
    sets.push_back(std::move(next));
    skipped.push_back(failed);
  }
};

Tree derive(Session& s, const Sequence& seq, const Axiom& a, std::size_t i) {
  while (i > 0 && seq.sets[i - 1].contains(a)) --i;
  if (i == 0) return leaf(a);
  Tree t{a, InferenceRule::forget(seq.names[i - 1].name), {}};
  for (const auto& p : s.justify(seq.sets[i - 1], a)) t.premises.push_back(derive(s, seq, p, i - 1));
  return t;
}

Tree proofOf(Session& s, const Sequence& seq) {
  std::size_t n = seq.sets.size() - 1;
  const Ontology& last = seq.sets[n];
  if (last.contains(s.goal())) return derive(s, seq, s.goal(), n);
  Tree t{s.goal(), InferenceRule::forget(""), {}};
  for (const auto& p : last) t.premises.push_back(derive(s, seq, p, n));
  return t;
}

FbpTrace traceOf(const Sequence& seq, std::size_t searchLength, const Session& s) {
  FbpTrace trace;
  for (std::size_t i = 0; i < seq.names.size(); ++i) {
    trace.steps.push_back({seq.names[i].name, seq.names[i].role, seq.sets[i], seq.sets[i + 1],
                           seq.skipped[i]});
  }
  trace.searchLength = searchLength;
  trace.stats = s.stats;
  trace.stats.elapsedMs = s.elapsedMs();
  return trace;
}

std::size_t successes(const Sequence& seq) {
  return static_cast<std::size_t>(std::count(seq.skipped.begin(), seq.skipped.end(), false));
}

// Steps 1-2 of the heuristic method, continuing `seq` from its last set.
void heuristic(Session& s, Sequence& seq) {
  std::set<Symbol> sigma;
  for (auto& x : s.names(seq.sets.back(), true)) sigma.insert(x);
  for (;;) {
    const Ontology& j = seq.sets.back();
    std::optional<Symbol> pick;
    int fewest = 0;
    for (const auto& x : s.names(j, true)) {
      if (!sigma.count(x)) continue;
      int n = occurrences(j, x);
      if (!pick || n < fewest) {
        pick = x;
        fewest = n;
      }
    }
    if (!pick) return;
    sigma.erase(*pick);
    auto next = s.forget(j, *pick);
    Ontology copy = j;
    seq.push(*pick, next ? *next : std::move(copy), !next);
  }
}

class SymbolSearch {
 public:
  explicit SymbolSearch(Session& s) : s_(s) {}

  Sequence run(const Ontology& j0) {
    Sequence start;
    start.sets.push_back(j0);
    best_ = start;
    bestRank_ = rank(start);
    explore(start);
    return best_;
  }

 private:
  std::pair<std::size_t, std::size_t> rank(const Sequence& seq) const {
    return {s_.names(seq.sets.back(), false).size(), seq.names.size()};
  }

  void explore(const Sequence& seq) {
    s_.checkBudget();
    auto r = rank(seq);
    if (r < bestRank_) {
      best_ = seq;
      bestRank_ = r;
    }
    std::size_t forgotten = seq.names.size();
    if (r.first == 0) return;
    if (bestRank_.first == 0 && forgotten + 1 >= bestRank_.second) return;
    const Ontology& j = seq.sets.back();
    if (auto [it, fresh] = visited_.emplace(j.setKey(), forgotten); !fresh) {
      if (it->second <= forgotten) return;
      it->second = forgotten;
    }

    struct Candidate {
      Symbol x;
      Ontology next;
      std::size_t remaining;
    };
    std::vector<Candidate> candidates;
    for (const auto& x : s_.names(j, false)) {
      if (auto next = s_.forget(j, x)) {
        candidates.push_back({x, *next, s_.names(*next, false).size()});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.remaining < b.remaining; });
    for (auto& c : candidates) {
      Sequence child = seq;
      child.push(c.x, std::move(c.next), false);
      explore(child);
    }
  }

  Session& s_;
  Sequence best_;
  std::pair<std::size_t, std::size_t> bestRank_;
  std::map<std::string, std::size_t> visited_;
};

class SizeSearch {
 public:
  SizeSearch(Session& s, Measure m) : s_(s), m_(m) {}

  struct Found {
    Tree tree;
    std::int64_t size;
    std::vector<FbpStep> path;
  };

  std::optional<Found> prove(const Ontology& j, std::int64_t n) {
    if (n <= 0) return std::nullopt;
    s_.checkBudget();
    const Axiom& goal = s_.goal();
    if (j.contains(goal)) {
      Tree t = leaf(goal);
      std::int64_t size = measure(t, m_);
      if (size > n) return std::nullopt;
      return Found{std::move(t), size, {}};
    }

    struct Candidate {
      Symbol x;
      Ontology next;
      std::int64_t score;
    };
    std::vector<Candidate> candidates;
    for (const auto& x : s_.names(j, false)) {
      if (auto next = s_.forget(j, x)) {
        std::int64_t names = static_cast<std::int64_t>(signatureOf(*next).size());
        candidates.push_back({x, *next, weight(*next, m_) * names});
      }
    }
    if (candidates.empty()) {
      Tree t{goal, InferenceRule::forget(""), {}};
      for (const auto& a : j) t.premises.push_back(leaf(a));
      std::int64_t size = measure(t, m_);
      if (size > n) return std::nullopt;
      return Found{std::move(t), size, {}};
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.score < b.score; });

    std::optional<Found> best;
    for (auto& c : candidates) {
      Ontology dropped = j.filtered([&](const Axiom& a) { return !c.next.contains(a); });
      auto sub = prove(c.next, n - weight(dropped, m_));
      if (!sub) continue;
      Tree tree = extend(sub->tree, j, c.x);
      std::int64_t size = measure(tree, m_);
      if (size > n || (best && size >= best->size)) continue;
      std::vector<FbpStep> path{{c.x.name, false, j, c.next, false}};
      path.insert(path.end(), sub->path.begin(), sub->path.end());
      best = Found{std::move(tree), size, std::move(path)};
      n = size;
    }
    return best;
  }

 private:
  // Derives the leaves of `t` that are new relative to `j` from their
  // justifications in `j`.
  Tree extend(const Tree& t, const Ontology& j, const Symbol& x) {
    if (t.rule) {
      Tree out{t.axiom, t.rule, {}};
      for (const auto& p : t.premises) out.premises.push_back(extend(p, j, x));
      return out;
    }
    if (j.contains(t.axiom)) return t;
    Tree out{t.axiom, InferenceRule::forget(x.name), {}};
    for (const auto& a : s_.justify(j, t.axiom)) out.premises.push_back(leaf(a));
    return out;
  }

  Session& s_;
  Measure m_;
};

}  // namespace

FbpResult heurProof(const FbpTask& t) {
  Session s(t);
  s.checkBudget();
  Sequence seq;
  seq.sets.push_back(s.justify(t.ontology, t.goal));
  heuristic(s, seq);
  Proof p = toProof(proofOf(s, seq));
  return {std::move(p), traceOf(seq, successes(seq), s)};
}

FbpResult symbProof(const FbpTask& t) {
  Session s(t);
  s.checkBudget();
  Sequence seq = SymbolSearch(s).run(s.justify(t.ontology, t.goal));
  std::size_t searched = seq.names.size();
  heuristic(s, seq);
  Proof p = toProof(proofOf(s, seq));
  return {std::move(p), traceOf(seq, searched, s)};
}

FbpResult sizeProof(const FbpTask& t) {
  Session s(t);
  s.checkBudget();
  Measure m = t.method == FbpMethod::SizeWeighted ? Measure::WeightedSize : Measure::TreeSize;
  Ontology j0 = s.justify(t.ontology, t.goal);
  auto found = SizeSearch(s, m).prove(j0, t.sizeBound);
  if (!found) {
    throw NoProofWithinBound("no forgetting-based proof of size at most " +
                             std::to_string(t.sizeBound));
  }
  FbpTrace trace;
  trace.steps = std::move(found->path);
  trace.searchLength = trace.steps.size();
  trace.stats = s.stats;
  trace.stats.elapsedMs = s.elapsedMs();
  return {toProof(found->tree), std::move(trace)};
}

FbpResult fbpProof(const FbpTask& t) {
  switch (t.method) {
    case FbpMethod::Heur: return heurProof(t);
    case FbpMethod::Symb: return symbProof(t);
    case FbpMethod::Size:
    case FbpMethod::SizeWeighted: return sizeProof(t);
  }
  return heurProof(t);
}

}  // namespace dlproof
