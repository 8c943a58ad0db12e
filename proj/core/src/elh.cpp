#include "dlproof/elh.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dlproof/error.hpp"

namespace dlproof {

std::size_t DerivationStructure::addVertex(const Axiom& a) {
  auto [it, inserted] = index_.emplace(a.key(), vertices_.size());
  if (inserted) {
    vertices_.push_back(a);
    into_.emplace_back();
    using_.emplace_back();
  }
  return it->second;
}

std::optional<std::size_t> DerivationStructure::find(const Axiom& a) const {
  auto it = index_.find(a.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DerivationStructure::addEdge(std::vector<std::size_t> premises, std::size_t conclusion,
                                  InferenceRule rule) {
  std::sort(premises.begin(), premises.end());
  premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
  if (std::binary_search(premises.begin(), premises.end(), conclusion)) return false;
  std::string key = std::to_string(conclusion) + "<" + rule.str();
  for (auto p : premises) key += "," + std::to_string(p);
  if (!edgeKeys_.insert(key).second) return false;
  std::size_t id = edges_.size();
  for (auto p : premises) using_[p].push_back(id);
  into_[conclusion].push_back(id);
  edges_.push_back({std::move(premises), conclusion, std::move(rule)});
  return true;
}

bool DerivationStructure::isAsserted(std::size_t v) const {
  for (auto e : into_[v]) {
    if (edges_[e].rule.id == RuleId::Asserted) return true;
  }
  return false;
}

namespace {

void collectSubconcepts(const Concept& c, std::vector<Concept>& out) {
  out.push_back(c);
  for (const auto& op : c.operands()) collectSubconcepts(op, out);
}

class Saturator {
 public:
  explicit Saturator(const Ontology& o) : o_(o) {}

  DerivationStructure run() {
    Signature sig = signatureOf(o_);
    for (const auto& a : o_) {
      std::size_t v = d_.addVertex(a);
      d_.addEdge({}, v, InferenceRule::of(RuleId::Asserted));
      if (a.isRoleInclusion()) {
        toldRoles_[a.sub()].push_back(a);
        continue;
      }
      told_[a.lhs().key()].push_back(a);
      std::vector<Concept> negatives;
      collectSubconcepts(a.lhs(), negatives);
      for (const auto& n : negatives) {
        if (n.is(ConceptKind::And)) {
          for (const auto& op : n.operands()) addUnique(negConj_[op.key()], n);
        } else if (n.is(ConceptKind::Exists)) {
          addUnique(negExists_[n.sub().key()], n);
        }
      }
    }
    closeRoles(sig);

    context(Concept::top());
    for (auto c : sig.concepts) context(Concept::atomic(c));

    while (!queue_.empty()) {
      auto [ctx, sub] = queue_.front();
      queue_.pop_front();
      process(ctx, sub);
    }
    return std::move(d_);
  }

 private:
  struct Context {
    Concept expr;
    std::set<std::string> subsumerKeys;
    std::vector<Concept> subsumers;
    std::vector<std::pair<std::size_t, RoleName>> preds;
  };

  static void addUnique(std::vector<Concept>& v, const Concept& c) {
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
  }

  void closeRoles(const Signature& sig) {
    for (auto r : sig.roles) supers_[r].insert(r);
    std::deque<std::pair<RoleName, RoleName>> work;
    for (const auto& [sub, axioms] : toldRoles_) {
      for (const auto& a : axioms) {
        if (supers_[sub].insert(a.sup()).second) work.emplace_back(sub, a.sup());
      }
    }
    while (!work.empty()) {
      auto [r, s] = work.front();
      work.pop_front();
      auto it = toldRoles_.find(s);
      if (it == toldRoles_.end()) continue;
      for (const auto& told : it->second) {
        RoleName t = told.sup();
        if (t == r) continue;
        std::size_t rs = d_.addVertex(Axiom::roleInclusion(r, s));
        std::size_t st = d_.addVertex(told);
        std::size_t rt = d_.addVertex(Axiom::roleInclusion(r, t));
        d_.addEdge({rs, st}, rt, InferenceRule::of(RuleId::RoleHier));
        if (supers_[r].insert(t).second) work.emplace_back(r, t);
      }
    }
  }

  std::size_t context(const Concept& c) {
    auto [it, inserted] = contextIndex_.emplace(c.key(), contexts_.size());
    if (!inserted) return it->second;
    contexts_.push_back(Context{c, {}, {}, {}});
    std::size_t id = it->second;
    derive(id, c, {}, RuleId::Refl);
    derive(id, Concept::top(), {}, RuleId::Top);
    return id;
  }

  std::size_t vertex(std::size_t ctx, const Concept& sub) {
    return d_.addVertex(Axiom::inclusion(contexts_[ctx].expr, sub));
  }

  std::size_t roleVertex(RoleName r, RoleName s) { return d_.addVertex(Axiom::roleInclusion(r, s)); }

  void derive(std::size_t ctx, const Concept& sub, std::vector<std::size_t> premises, RuleId rule) {
    std::size_t v = vertex(ctx, sub);
    d_.addEdge(std::move(premises), v, InferenceRule::of(rule));
    Context& c = contexts_[ctx];
    if (c.subsumerKeys.insert(sub.key()).second) {
      c.subsumers.push_back(sub);
      queue_.emplace_back(ctx, sub);
    }
  }

  // C ⊑ ∃r.F, F ⊑ E, r ⊑* s  ⟹  C ⊑ ∃s.E for each negative ∃s.E.
  void propagate(std::size_t pred, RoleName r, std::size_t fillerCtx, const Concept& e) {
    auto it = negExists_.find(e.key());
    if (it == negExists_.end()) return;
    const Concept filler = contexts_[fillerCtx].expr;
    for (const Concept& target : std::vector<Concept>(it->second)) {
      RoleName s = target.role();
      if (!supers_[r].count(s)) continue;
      std::vector<std::size_t> premises{vertex(pred, Concept::exists(r, filler))};
      if (!(e == filler)) premises.push_back(vertex(fillerCtx, e));
      if (!(r == s)) premises.push_back(roleVertex(r, s));
      derive(pred, target, std::move(premises), RuleId::Exists);
    }
  }

  void process(std::size_t ctx, const Concept& sub) {
    std::size_t self = vertex(ctx, sub);

    if (sub.is(ConceptKind::And)) {
      for (const auto& op : sub.operands()) derive(ctx, op, {self}, RuleId::AndMinus);
    }

    if (auto it = told_.find(sub.key()); it != told_.end()) {
      for (const Axiom& a : std::vector<Axiom>(it->second)) {
        derive(ctx, a.rhs(), {self, d_.addVertex(a)}, RuleId::Hier);
      }
    }

    if (auto it = negConj_.find(sub.key()); it != negConj_.end()) {
      for (const Concept& conj : std::vector<Concept>(it->second)) {
        std::vector<std::size_t> premises;
        bool complete = true;
        for (const auto& op : conj.operands()) {
          if (!contexts_[ctx].subsumerKeys.count(op.key())) {
            complete = false;
            break;
          }
          premises.push_back(vertex(ctx, op));
        }
        if (complete) derive(ctx, conj, std::move(premises), RuleId::AndPlus);
      }
    }

    if (sub.is(ConceptKind::Exists)) {
      std::size_t fillerCtx = context(sub.sub());
      auto& preds = contexts_[fillerCtx].preds;
      std::pair<std::size_t, RoleName> link{ctx, sub.role()};
      if (std::find(preds.begin(), preds.end(), link) == preds.end()) {
        preds.push_back(link);
        for (const Concept& e : std::vector<Concept>(contexts_[fillerCtx].subsumers)) {
          propagate(ctx, sub.role(), fillerCtx, e);
        }
      }
    }

    for (auto [pred, role] : std::vector<std::pair<std::size_t, RoleName>>(contexts_[ctx].preds)) {
      propagate(pred, role, ctx, sub);
    }
  }

  const Ontology& o_;
  DerivationStructure d_;
  std::unordered_map<std::string, std::vector<Axiom>> told_;
  std::map<RoleName, std::vector<Axiom>> toldRoles_;
  std::unordered_map<std::string, std::vector<Concept>> negConj_;
  std::unordered_map<std::string, std::vector<Concept>> negExists_;
  std::map<RoleName, std::set<RoleName>> supers_;
  std::vector<Context> contexts_;
  std::unordered_map<std::string, std::size_t> contextIndex_;
  std::deque<std::pair<std::size_t, Concept>> queue_;
};

}  // namespace

DerivationStructure saturate(const Ontology& o) {
  if (fragmentOf(o) != Fragment::ELH) {
    throw FragmentError("saturation requires an ELH ontology, got " +
                        std::string(fragmentName(fragmentOf(o))));
  }
  return Saturator(o).run();
}

std::vector<Axiom> entailedAtomicCIs(const DerivationStructure& d, const Ontology& o,
                                     bool includeTautologies) {
  Signature sig = signatureOf(o);
  std::vector<Axiom> out;
  for (const auto& a : d.vertices()) {
    if (!a.isAtomicCI()) continue;
    if (!sig.concepts.count(a.lhs().name()) || !sig.concepts.count(a.rhs().name())) continue;
    if (!includeTautologies && a.lhs() == a.rhs()) continue;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Axiom> entailedAtomicCIs(const Ontology& o, bool includeTautologies) {
  return entailedAtomicCIs(saturate(o), o, includeTautologies);
}

}  // namespace dlproof
