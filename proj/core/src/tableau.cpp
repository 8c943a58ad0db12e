#include "dlproof/tableau.hpp"

#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "dlproof/error.hpp"

namespace dlproof {

namespace {

using Label = std::set<Concept>;

std::map<RoleName, std::set<RoleName>> roleClosure(const Ontology& o) {
  std::map<RoleName, std::set<RoleName>> sup;
  for (auto r : signatureOf(o).roles) sup[r].insert(r);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : o) {
      if (!a.isRoleInclusion()) continue;
      for (auto& [r, s] : sup) {
        if (s.count(a.sub()) && s.insert(a.sup()).second) changed = true;
      }
    }
  }
  return sup;
}

std::string labelKey(const Label& l) {
  std::string k;
  for (const auto& c : l) {
    k += c.key();
    k += ';';
  }
  return k;
}

// Subset-blocking ALCH tableau with lazy unfolding of atomic-lhs inclusions
// and semantic branching on disjunctions.
class Tableau {
 public:
  Tableau(const Ontology& o, TableauConfig cfg) : cfg_(cfg), supers_(roleClosure(o)) {
    for (const auto& a : o) {
      if (!a.isConceptInclusion()) continue;
      if (a.lhs().is(ConceptKind::Atomic)) {
        unfold_[a.lhs().name()].push_back(toNNF(a.rhs()));
      } else {
        Concept g = Concept::disjunction({negateNNF(a.lhs()), toNNF(a.rhs())});
        if (!g.is(ConceptKind::Top)) gcis_.push_back(g);
      }
    }
  }

  bool satisfiable(const Concept& c) {
    Label initial{toNNF(c)};
    for (const auto& g : gcis_) initial.insert(g);
    std::vector<const Label*> ancestors;
    return solve(initial, ancestors);
  }

 private:
  bool isSuper(RoleName r, RoleName s) const {
    if (r == s) return true;
    auto it = supers_.find(r);
    return it != supers_.end() && it->second.count(s);
  }

  // Adds `c` and its propositional consequences. Returns false on clash.
  bool add(Label& l, const Concept& c) {
    std::deque<Concept> work{c};
    while (!work.empty()) {
      Concept x = std::move(work.front());
      work.pop_front();
      if (!l.insert(x).second) continue;
      switch (x.kind()) {
        case ConceptKind::Bottom: return false;
        case ConceptKind::Atomic: {
          if (l.count(Concept::negation(x))) return false;
          auto it = unfold_.find(x.name());
          if (it != unfold_.end()) work.insert(work.end(), it->second.begin(), it->second.end());
          break;
        }
        case ConceptKind::Not:
          if (l.count(x.sub())) return false;
          break;
        case ConceptKind::And:
          work.insert(work.end(), x.operands().begin(), x.operands().end());
          break;
        default: break;
      }
    }
    return true;
  }

  bool solve(const Label& seed, std::vector<const Label*>& ancestors) {
    std::string seedKey = labelKey(seed);
    if (unsat_.count(seedKey)) return false;
    if (++nodes_ > cfg_.maxNodes) {
      throw ResourceExhausted("tableau node limit of " + std::to_string(cfg_.maxNodes) +
                              " exceeded");
    }
    Label l;
    bool ok = true;
    for (const auto& c : seed) {
      if (!add(l, c)) {
        ok = false;
        break;
      }
    }
    bool result = ok && branch(l, ancestors);
    if (!result) unsat_.insert(seedKey);
    return result;
  }

  bool branch(const Label& l, std::vector<const Label*>& ancestors) {
    for (const auto& c : l) {
      if (!c.is(ConceptKind::Or)) continue;
      bool satisfied = false;
      for (const auto& d : c.operands()) {
        if (l.count(d)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      auto ops = c.operands();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        Label next = l;
        bool ok = add(next, ops[i]);
        for (std::size_t j = 0; ok && j < i; ++j) ok = add(next, negateNNF(ops[j]));
        if (ok && branch(next, ancestors)) return true;
      }
      return false;
    }
    return expandSuccessors(l, ancestors);
  }

  bool expandSuccessors(const Label& l, std::vector<const Label*>& ancestors) {
    ancestors.push_back(&l);
    bool ok = true;
    for (const auto& c : l) {
      if (!c.is(ConceptKind::Exists)) continue;
      Label succ{c.sub()};
      for (const auto& d : l) {
        if (d.is(ConceptKind::Forall) && isSuper(c.role(), d.role())) succ.insert(d.sub());
      }
      for (const auto& g : gcis_) succ.insert(g);
      bool blocked = false;
      for (const Label* a : ancestors) {
        if (std::includes(a->begin(), a->end(), succ.begin(), succ.end())) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      if (!solve(succ, ancestors)) {
        ok = false;
        break;
      }
    }
    ancestors.pop_back();
    return ok;
  }

  TableauConfig cfg_;
  std::map<RoleName, std::set<RoleName>> supers_;
  std::map<ConceptName, std::vector<Concept>> unfold_;
  std::vector<Concept> gcis_;
  std::unordered_set<std::string> unsat_;
  std::size_t nodes_ = 0;
};

void requireALCH(const Ontology& o) {
  if (fragmentOf(o) == Fragment::Other) throw FragmentError("tableau requires an ALCH ontology");
}

}  // namespace

bool isSatisfiable(const Ontology& o, const Concept& c, TableauConfig cfg) {
  requireALCH(o);
  return Tableau(o, cfg).satisfiable(c);
}

bool entails(const Ontology& o, const Axiom& a, TableauConfig cfg) {
  requireALCH(o);
  if (a.isRoleInclusion()) {
    if (a.sub() == a.sup()) return true;
    auto sup = roleClosure(o);
    auto it = sup.find(a.sub());
    return it != sup.end() && it->second.count(a.sup());
  }
  Concept test = Concept::conjunction({toNNF(a.lhs()), negateNNF(a.rhs())});
  return !Tableau(o, cfg).satisfiable(test);
}

EntailmentOracle tableauOracle(TableauConfig cfg) {
  return [cfg](const Ontology& o, const Axiom& a) { return entails(o, a, cfg); };
}

}  // namespace dlproof
