#include "dlproof/forgetting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "dlproof/error.hpp"
#include "dlproof/tableau.hpp"

namespace dlproof {

const char* reasonName(ForgettingFailure::Reason r) {
  return r == ForgettingFailure::Reason::Timeout ? "timeout" : "inexpressible";
}

Concept simplify(const Concept& c) {
  return transform(c, [](const Concept& e) -> Concept {
    switch (e.kind()) {
      case ConceptKind::And: {
        std::vector<Concept> ops;
        for (const auto& op : e.operands()) {
          if (op.is(ConceptKind::Bottom)) return Concept::bottom();
          if (!op.is(ConceptKind::Top)) ops.push_back(op);
        }
        return Concept::conjunction(std::move(ops));
      }
      case ConceptKind::Or: {
        std::vector<Concept> ops;
        for (const auto& op : e.operands()) {
          if (op.is(ConceptKind::Top)) return Concept::top();
          if (!op.is(ConceptKind::Bottom)) ops.push_back(op);
        }
        return Concept::disjunction(std::move(ops));
      }
      case ConceptKind::Exists:
        return e.sub().is(ConceptKind::Bottom) ? Concept::bottom() : e;
      case ConceptKind::Forall:
        return e.sub().is(ConceptKind::Top) ? Concept::top() : e;
      case ConceptKind::Not:
        if (e.sub().is(ConceptKind::Not)) return e.sub().sub();
        if (e.sub().is(ConceptKind::Top)) return Concept::bottom();
        if (e.sub().is(ConceptKind::Bottom)) return Concept::top();
        return e;
      default:
        return e;
    }
  });
}

Ontology simplify(const Ontology& o) {
  Ontology out(o.name());
  for (const auto& a : o) {
    if (a.isRoleInclusion()) {
      if (!(a.sub() == a.sup())) out.insert(a);
      continue;
    }
    Concept l = simplify(a.lhs());
    Concept r = simplify(a.rhs());
    if (r.is(ConceptKind::Top) || l.is(ConceptKind::Bottom) || l == r) continue;
    out.insert(Axiom::inclusion(l, r));
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct TimedOut {};
struct NotExpressible {};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : start_(Clock::now()), end_(start_ + budget) {}
  void check() const {
    if (Clock::now() >= end_) throw TimedOut{};
  }
  std::int64_t elapsedMs() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  Clock::time_point end_;
};

// Polarity of x's occurrences: bit 0 positive, bit 1 negative.
int polarity(const Concept& c, ConceptName x, bool positive) {
  switch (c.kind()) {
    case ConceptKind::Atomic:
      return c.name() == x ? (positive ? 1 : 2) : 0;
    case ConceptKind::Not:
      return polarity(c.sub(), x, !positive);
    default: {
      int p = 0;
      for (const auto& op : c.operands()) p |= polarity(op, x, positive);
      return p;
    }
  }
}

int polarity(const Ontology& o, ConceptName x) {
  int p = 0;
  for (const auto& a : o) {
    if (!a.isConceptInclusion()) continue;
    p |= polarity(a.lhs(), x, false) | polarity(a.rhs(), x, true);
  }
  return p;
}

class RoleClosure {
 public:
  explicit RoleClosure(const Ontology& o) {
    Signature sig = signatureOf(o);
    roles_.assign(sig.roles.begin(), sig.roles.end());
    for (auto r : roles_) supers_[r].insert(r);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& a : o) {
        if (!a.isRoleInclusion()) continue;
        for (auto r : roles_) {
          if (supers_[r].count(a.sub()) && supers_[r].insert(a.sup()).second) changed = true;
        }
      }
    }
  }
  bool sub(RoleName r, RoleName s) const {
    auto it = supers_.find(r);
    return r == s || (it != supers_.end() && it->second.count(s));
  }
  const std::vector<RoleName>& roles() const { return roles_; }

 private:
  std::vector<RoleName> roles_;
  std::map<RoleName, std::set<RoleName>> supers_;
};

// Resolution-based elimination of one concept name. A clause is a set of
// literals valid in a context: a set of definers whose conjunction implies
// the clause. Context 0 is the empty set, i.e. the clause holds globally.
class ConceptForgetter {
 public:
  ConceptForgetter(const Ontology& o, ConceptName x, const Deadline& deadline)
      : o_(o), x_(x), deadline_(deadline), roles_(o) {
    contexts_.push_back({});
    contextIndex_[{}] = 0;
    byContext_.emplace_back();
    posX_ = literal({Lit::Pos, x, {}, 0, Concept::top()});
    negX_ = literal({Lit::Neg, x, {}, 0, Concept::top()});
  }

  Ontology run() {
    for (const auto& a : o_) {
      if (!mentions(a, x_)) continue;
      Concept c = simplify(toNNF(Concept::disjunction({negateNNF(a.lhs()), a.rhs()})));
      for (auto& lits : cnf(c)) addClause(std::move(lits), 0);
    }
    while (!queue_.empty() && !inconsistent_) {
      deadline_.check();
      std::size_t id = queue_.front();
      queue_.pop_front();
      process(id);
    }
    return extract();
  }

 private:
  struct Lit {
    enum Kind { Pos, Neg, Exists, Forall, Opaque };
    Kind kind;
    ConceptName name;
    RoleName role;
    std::size_t ctx;  // filler context of Exists/Forall
    Concept expr;  // Opaque: an x-free concept
  };

  struct Clause {
    std::vector<std::size_t> lits;
    std::size_t ctx;
  };

  std::size_t literal(Lit l) {
    std::string key;
    switch (l.kind) {
      case Lit::Pos: key = "+" + l.name.str(); break;
      case Lit::Neg: key = "-" + l.name.str(); break;
      case Lit::Exists: key = "E" + l.role.str() + "." + std::to_string(l.ctx); break;
      case Lit::Forall: key = "A" + l.role.str() + "." + std::to_string(l.ctx); break;
      case Lit::Opaque: key = "O" + l.expr.key(); break;
    }
    auto [it, inserted] = literalIndex_.emplace(key, literals_.size());
    if (inserted) literals_.push_back(std::move(l));
    return it->second;
  }

  bool isDefinerLiteral(std::size_t l) const {
    return literals_[l].kind == Lit::Exists || literals_[l].kind == Lit::Forall;
  }

  std::size_t context(std::vector<std::size_t> definers) {
    std::sort(definers.begin(), definers.end());
    definers.erase(std::unique(definers.begin(), definers.end()), definers.end());
    auto [it, inserted] = contextIndex_.emplace(definers, contexts_.size());
    if (!inserted) return it->second;
    std::size_t id = it->second;
    contexts_.push_back(definers);
    byContext_.emplace_back();
    // Clauses of every sub-context hold here as well.
    for (std::size_t t = 1; t < id; ++t) {
      if (!strictSubset(t, id)) continue;
      for (std::size_t c : std::vector<std::size_t>(byContext_[t])) {
        addClause(clauses_[c].lits, id);
      }
    }
    return id;
  }

  bool strictSubset(std::size_t a, std::size_t b) const {
    const auto& sa = contexts_[a];
    const auto& sb = contexts_[b];
    return sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  }

  std::size_t unite(std::size_t a, std::size_t b) {
    std::vector<std::size_t> u = contexts_[a];
    u.insert(u.end(), contexts_[b].begin(), contexts_[b].end());
    return context(std::move(u));
  }

  // Fresh (or reused) definer for a filler mentioning x; returns its context.
  std::size_t definer(const Concept& filler) {
    auto it = definerByFiller_.find(filler.key());
    if (it != definerByFiller_.end()) return it->second;
    std::size_t d = definerCount_++;
    std::size_t ctx = context({d});
    definerByFiller_.emplace(filler.key(), ctx);
    for (auto& lits : cnf(filler)) addClause(std::move(lits), ctx);
    return ctx;
  }

  using Cnf = std::vector<std::vector<std::size_t>>;

  Cnf cnf(const Concept& c) {
    if (c.is(ConceptKind::Top)) return {};
    if (c.is(ConceptKind::Bottom)) return {{}};
    if (!mentions(c, x_)) {
      if (c.is(ConceptKind::Atomic)) return {{literal({Lit::Pos, c.name(), {}, 0, Concept::top()})}};
      if (c.is(ConceptKind::Not) && c.sub().is(ConceptKind::Atomic)) {
        return {{literal({Lit::Neg, c.sub().name(), {}, 0, Concept::top()})}};
      }
      return {{literal({Lit::Opaque, {}, {}, 0, c})}};
    }
    switch (c.kind()) {
      case ConceptKind::Atomic: return {{posX_}};
      case ConceptKind::Not: return {{negX_}};
      case ConceptKind::And: {
        Cnf out;
        for (const auto& op : c.operands()) {
          for (auto& cl : cnf(op)) out.push_back(std::move(cl));
        }
        return out;
      }
      case ConceptKind::Or: {
        Cnf acc{{}};
        for (const auto& op : c.operands()) {
          Cnf part = cnf(op);
          Cnf next;
          for (const auto& a : acc) {
            for (const auto& b : part) {
              deadline_.check();
              std::vector<std::size_t> merged = a;
              merged.insert(merged.end(), b.begin(), b.end());
              next.push_back(std::move(merged));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall: {
        std::size_t ctx = definer(c.sub());
        auto kind = c.is(ConceptKind::Exists) ? Lit::Exists : Lit::Forall;
        return {{literal({kind, {}, c.role(), ctx, Concept::top()})}};
      }
      default:
        return {};
    }
  }

  bool subsumes(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) const {
    return small.size() <= big.size() &&
           std::includes(big.begin(), big.end(), small.begin(), small.end());
  }

  bool tautology(const std::vector<std::size_t>& lits) const {
    std::set<std::pair<bool, ConceptName>> seen;
    for (auto l : lits) {
      const Lit& lit = literals_[l];
      if (lit.kind != Lit::Pos && lit.kind != Lit::Neg) continue;
      if (seen.count({lit.kind != Lit::Pos, lit.name})) return true;
      seen.insert({lit.kind == Lit::Pos, lit.name});
    }
    return false;
  }

  void addClause(std::vector<std::size_t> lits, std::size_t ctx) {
    if (inconsistent_ || (ctx != 0 && unsat_.count(ctx))) return;
    // ∃r.S with S unsatisfiable is ⊥.
    std::erase_if(lits, [&](std::size_t l) {
      return literals_[l].kind == Lit::Exists && unsat_.count(literals_[l].ctx);
    });
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    if (tautology(lits)) return;
    for (std::size_t home : {ctx, std::size_t{0}}) {
      for (std::size_t c : byContext_[home]) {
        if (subsumes(clauses_[c].lits, lits)) return;
      }
      if (ctx == 0) break;
    }

    std::size_t id = clauses_.size();
    clauses_.push_back({lits, ctx});
    byContext_[ctx].push_back(id);
    queue_.push_back(id);

    if (lits.empty()) {
      unsat_.insert(ctx);
      if (ctx == 0) {
        inconsistent_ = true;
        return;
      }
      for (std::size_t c = 0; c < id; ++c) {
        const auto& cl = clauses_[c].lits;
        bool affected = std::any_of(cl.begin(), cl.end(), [&](std::size_t l) {
          return literals_[l].kind == Lit::Exists && unsat_.count(literals_[l].ctx);
        });
        if (affected) addClause(clauses_[c].lits, clauses_[c].ctx);
      }
    }
    if (ctx != 0) {
      for (std::size_t s = ctx + 1; s < contexts_.size(); ++s) {
        if (strictSubset(ctx, s)) addClause(lits, s);
      }
    }
  }

  // Context in which two clauses combine, if they are in the same context
  // or one of them is global.
  static std::optional<std::size_t> combine(std::size_t a, std::size_t b) {
    if (a == b || b == 0) return a;
    if (a == 0) return b;
    return std::nullopt;
  }

  static std::vector<std::size_t> without(const std::vector<std::size_t>& lits, std::size_t l) {
    std::vector<std::size_t> out;
    for (auto m : lits) {
      if (m != l) out.push_back(m);
    }
    return out;
  }

  void resolve(std::size_t pos, std::size_t neg) {
    auto ctx = combine(clauses_[pos].ctx, clauses_[neg].ctx);
    if (!ctx) return;
    auto lits = without(clauses_[pos].lits, posX_);
    auto rest = without(clauses_[neg].lits, negX_);
    lits.insert(lits.end(), rest.begin(), rest.end());
    addClause(std::move(lits), *ctx);
  }

  // ∀r.S1 ∨ C1 and Q s.S2 ∨ C2 give Q t.(S1 ∪ S2) ∨ C1 ∨ C2.
  void propagate(std::size_t c1, std::size_t l1, std::size_t c2, std::size_t l2) {
    auto ctx = combine(clauses_[c1].ctx, clauses_[c2].ctx);
    if (!ctx) return;
    Lit a = literals_[l1];
    Lit b = literals_[l2];
    auto rest = without(clauses_[c1].lits, l1);
    auto other = without(clauses_[c2].lits, l2);
    rest.insert(rest.end(), other.begin(), other.end());
    if (b.kind == Lit::Exists) {
      if (!roles_.sub(b.role, a.role)) return;
      std::size_t u = unite(a.ctx, b.ctx);
      if (u == b.ctx) return;
      auto lits = rest;
      lits.push_back(literal({Lit::Exists, {}, b.role, u, Concept::top()}));
      addClause(std::move(lits), *ctx);
      return;
    }
    for (auto t : roles_.roles()) {
      if (!roles_.sub(t, a.role) || !roles_.sub(t, b.role)) continue;
      std::size_t u = unite(a.ctx, b.ctx);
      if ((t == b.role && u == b.ctx) || (t == a.role && u == a.ctx)) continue;
      auto lits = rest;
      lits.push_back(literal({Lit::Forall, {}, t, u, Concept::top()}));
      addClause(std::move(lits), *ctx);
    }
  }

  void process(std::size_t id) {
    if (id >= clauses_.size()) return;
    const auto lits = clauses_[id].lits;
    for (std::size_t l : lits) {
      if (l == posX_) {
        for (auto other : processedNeg_) resolve(id, other);
      } else if (l == negX_) {
        for (auto other : processedPos_) resolve(other, id);
      } else if (isDefinerLiteral(l)) {
        for (auto [other, m] : processedRole_) {
          if (literals_[l].kind == Lit::Forall) {
            propagate(id, l, other, m);
          } else if (literals_[m].kind == Lit::Forall) {
            propagate(other, m, id, l);
          }
        }
      }
    }
    for (std::size_t l : lits) {
      if (l == posX_) processedPos_.push_back(id);
      if (l == negX_) processedNeg_.push_back(id);
      if (isDefinerLiteral(l)) processedRole_.emplace_back(id, l);
    }
  }

  bool xFree(const Clause& c) const {
    return !std::binary_search(c.lits.begin(), c.lits.end(), posX_) &&
           !std::binary_search(c.lits.begin(), c.lits.end(), negX_);
  }

  // x-free clauses of a context that no other x-free clause of the context
  // or of the global context subsumes.
  std::vector<std::size_t> residue(std::size_t ctx) const {
    std::vector<std::size_t> candidates;
    for (std::size_t c : byContext_[ctx]) {
      if (xFree(clauses_[c])) candidates.push_back(c);
    }
    std::vector<std::size_t> global;
    if (ctx != 0) {
      for (std::size_t c : byContext_[0]) {
        if (xFree(clauses_[c])) global.push_back(c);
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t c : candidates) {
      bool redundant = false;
      for (std::size_t d : candidates) {
        if (d != c && subsumes(clauses_[d].lits, clauses_[c].lits)) redundant = true;
      }
      for (std::size_t d : global) {
        if (subsumes(clauses_[d].lits, clauses_[c].lits)) redundant = true;
      }
      if (!redundant) out.push_back(c);
    }
    return out;
  }

  Concept literalConcept(std::size_t l) {
    const Lit& lit = literals_[l];
    switch (lit.kind) {
      case Lit::Pos: return Concept::atomic(lit.name);
      case Lit::Neg: return Concept::negation(Concept::atomic(lit.name));
      case Lit::Exists: return Concept::exists(lit.role, definerConcept(lit.ctx));
      case Lit::Forall: return Concept::forall(lit.role, definerConcept(lit.ctx));
      case Lit::Opaque: return lit.expr;
    }
    return Concept::top();
  }

  Concept definerConcept(std::size_t ctx) {
    if (unsat_.count(ctx)) return Concept::bottom();
    if (auto it = resolved_.find(ctx); it != resolved_.end()) return it->second;
    if (!open_.insert(ctx).second) throw NotExpressible{};
    std::vector<Concept> conj;
    for (std::size_t c : residue(ctx)) {
      std::vector<Concept> disj;
      for (auto l : clauses_[c].lits) disj.push_back(literalConcept(l));
      conj.push_back(Concept::disjunction(std::move(disj)));
    }
    open_.erase(ctx);
    Concept out = simplify(Concept::conjunction(std::move(conj)));
    resolved_.emplace(ctx, out);
    return out;
  }

  static int negations(const Concept& c) {
    int n = c.is(ConceptKind::Not) ? 1 : 0;
    for (const auto& op : c.operands()) n += negations(op);
    return n;
  }

  // Negative atoms go to the left; a universal whose negation reads more
  // naturally becomes an existential on the left.
  Axiom clauseAxiom(const Clause& c) {
    std::vector<Concept> lhs;
    std::vector<Concept> rhs;
    for (auto l : c.lits) {
      Concept lit = simplify(literalConcept(l));
      if (lit.is(ConceptKind::Not) && lit.sub().is(ConceptKind::Atomic)) {
        lhs.push_back(lit.sub());
      } else if (lit.is(ConceptKind::Forall) &&
                 negations(negateNNF(lit.sub())) < negations(lit.sub())) {
        lhs.push_back(negateNNF(lit));
      } else {
        rhs.push_back(lit);
      }
    }
    return Axiom::inclusion(Concept::conjunction(std::move(lhs)),
                            Concept::disjunction(std::move(rhs)));
  }

  Ontology extract() {
    Ontology out(o_.name());
    for (const auto& a : o_) {
      if (!mentions(a, x_)) out.insert(a);
    }
    if (inconsistent_) {
      out.insert(Axiom::inclusion(Concept::top(), Concept::bottom()));
      return simplify(out);
    }
    std::vector<Axiom> derived;
    for (std::size_t c : residue(0)) derived.push_back(clauseAxiom(clauses_[c]));
    std::sort(derived.begin(), derived.end());
    for (auto& a : derived) out.insert(std::move(a));
    return simplify(out);
  }

  const Ontology& o_;
  ConceptName x_;
  const Deadline& deadline_;
  RoleClosure roles_;

  std::vector<Lit> literals_;
  std::unordered_map<std::string, std::size_t> literalIndex_;
  std::size_t posX_ = 0;
  std::size_t negX_ = 0;

  std::vector<std::vector<std::size_t>> contexts_;
  std::map<std::vector<std::size_t>, std::size_t> contextIndex_;
  std::unordered_map<std::string, std::size_t> definerByFiller_;
  std::size_t definerCount_ = 0;

  std::vector<Clause> clauses_;
  std::vector<std::vector<std::size_t>> byContext_;
  std::deque<std::size_t> queue_;
  std::vector<std::size_t> processedPos_;
  std::vector<std::size_t> processedNeg_;
  std::vector<std::pair<std::size_t, std::size_t>> processedRole_;
  std::set<std::size_t> unsat_;
  bool inconsistent_ = false;

  std::map<std::size_t, Concept> resolved_;
  std::set<std::size_t> open_;
};

void requireAlch(const Ontology& o) {
  Fragment f = fragmentOf(o);
  if (f != Fragment::ELH && f != Fragment::ALCH) {
    throw FragmentError("forgetting requires an ALCH ontology, got " +
                        std::string(fragmentName(f)));
  }
}

ForgettingResult failure(ForgettingFailure::Reason r, const Deadline& d) {
  return ForgettingFailure{r, d.elapsedMs()};
}

// Rewrites role occurrences bottom-up with polarity: `f(c, positive)` is
// called on every ∃/∀ over the forgotten role with its filler already
// rewritten.
Concept rewriteRole(const Concept& c, RoleName r, bool positive,
                    const std::function<Concept(const Concept&, bool)>& f) {
  switch (c.kind()) {
    case ConceptKind::Not:
      return Concept::negation(rewriteRole(c.sub(), r, !positive, f));
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(rewriteRole(op, r, positive, f));
      return c.is(ConceptKind::And) ? Concept::conjunction(std::move(ops))
                                    : Concept::disjunction(std::move(ops));
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      Concept filler = rewriteRole(c.sub(), r, positive, f);
      Concept e = c.is(ConceptKind::Exists) ? Concept::exists(c.role(), filler)
                                            : Concept::forall(c.role(), filler);
      return c.role() == r ? f(e, positive) : e;
    }
    default:
      return c;
  }
}

// Bit 0: r used existentially (positive ∃ or negative ∀); bit 1: universally.
int roleUse(const Concept& c, RoleName r, bool positive) {
  int use = 0;
  if (c.is(ConceptKind::Exists) && c.role() == r) use |= positive ? 1 : 2;
  if (c.is(ConceptKind::Forall) && c.role() == r) use |= positive ? 2 : 1;
  bool p = c.is(ConceptKind::Not) ? !positive : positive;
  for (const auto& op : c.operands()) use |= roleUse(op, r, p);
  return use;
}

}  // namespace

ForgettingResult forgetConceptName(const Ontology& o, ConceptName x,
                                   std::chrono::milliseconds timeout) {
  requireAlch(o);
  Deadline deadline(timeout);
  if (timeout.count() <= 0) return failure(ForgettingFailure::Reason::Timeout, deadline);

  int p = polarity(o, x);
  if (p == 0) return o;
  if (p == 1 || p == 2) {
    Concept by = p == 1 ? Concept::top() : Concept::bottom();
    Ontology out(o.name());
    for (const auto& a : o) {
      out.insert(a.isConceptInclusion() && mentions(a, x)
                     ? Axiom::inclusion(substitute(a.lhs(), x, by), substitute(a.rhs(), x, by))
                     : a);
    }
    return simplify(out);
  }

  try {
    ConceptForgetter f(o, x, deadline);
    Ontology out = f.run();
    for (const auto& a : out) {
      if (mentions(a, x)) return failure(ForgettingFailure::Reason::Inexpressible, deadline);
    }
    return out;
  } catch (const TimedOut&) {
    return failure(ForgettingFailure::Reason::Timeout, deadline);
  } catch (const NotExpressible&) {
    return failure(ForgettingFailure::Reason::Inexpressible, deadline);
  }
}

ForgettingResult forgetRoleName(const Ontology& o, RoleName r, std::chrono::milliseconds timeout) {
  requireAlch(o);
  Deadline deadline(timeout);
  if (timeout.count() <= 0) return failure(ForgettingFailure::Reason::Timeout, deadline);
  if (!signatureOf(o).roles.count(r)) return o;

  std::vector<RoleName> supers;
  std::vector<RoleName> subs;
  int use = 0;
  for (const auto& a : o) {
    if (a.isRoleInclusion()) {
      if (a.sub() == r && !(a.sup() == r)) supers.push_back(a.sup());
      if (a.sup() == r && !(a.sub() == r)) subs.push_back(a.sub());
    } else {
      use |= roleUse(a.lhs(), r, false) | roleUse(a.rhs(), r, true);
    }
  }

  std::function<Concept(const Concept&, bool)> replace;
  if (use == 3 || (use == 1 && supers.size() > 1)) {
    return failure(ForgettingFailure::Reason::Inexpressible, deadline);
  }
  if (use == 1 && supers.size() == 1) {
    RoleName s = supers.front();
    replace = [s](const Concept& e, bool) {
      return e.is(ConceptKind::Exists) ? Concept::exists(s, e.sub()) : Concept::forall(s, e.sub());
    };
  } else if (use == 1) {
    // Without super-roles, r-edges can be added freely: ∃r.C holds wherever
    // C is satisfiable.
    replace = [&](const Concept& e, bool) {
      Concept witness = e.is(ConceptKind::Exists) ? e.sub() : negateNNF(e.sub());
      bool sat = isSatisfiable(o, witness);
      if (e.is(ConceptKind::Exists)) return sat ? Concept::top() : Concept::bottom();
      return sat ? Concept::bottom() : Concept::top();
    };
  } else {
    // Interpreting r as the union of its sub-roles.
    replace = [&](const Concept& e, bool) {
      std::vector<Concept> parts;
      for (auto t : subs) {
        parts.push_back(e.is(ConceptKind::Forall) ? Concept::forall(t, e.sub())
                                                  : Concept::exists(t, e.sub()));
      }
      return e.is(ConceptKind::Forall) ? Concept::conjunction(std::move(parts))
                                       : Concept::disjunction(std::move(parts));
    };
  }

  Ontology out(o.name());
  try {
    for (const auto& a : o) {
      deadline.check();
      if (a.isRoleInclusion()) {
        if (!(a.sub() == r) && !(a.sup() == r)) out.insert(a);
        continue;
      }
      if (!mentions(a, r)) {
        out.insert(a);
        continue;
      }
      out.insert(Axiom::inclusion(rewriteRole(a.lhs(), r, false, replace),
                                  rewriteRole(a.rhs(), r, true, replace)));
    }
  } catch (const TimedOut&) {
    return failure(ForgettingFailure::Reason::Timeout, deadline);
  } catch (const ResourceExhausted&) {
    return failure(ForgettingFailure::Reason::Timeout, deadline);
  }
  for (auto t : subs) {
    for (auto s : supers) {
      if (!(t == s)) out.insert(Axiom::roleInclusion(t, s));
    }
  }
  return simplify(out);
}

}  // namespace dlproof
