#include "dlproof/concept.hpp"

#include <algorithm>

namespace dlproof {

Concept Concept::make(ConceptKind kind, ConceptName name, RoleName role,
                      std::vector<Concept> operands) {
  std::string key;
  switch (kind) {
    case ConceptKind::Top: key = "owl:Thing"; break;
    case ConceptKind::Bottom: key = "owl:Nothing"; break;
    case ConceptKind::Atomic: key = name.str(); break;
    case ConceptKind::Not: key = "ObjectComplementOf(" + operands[0].key() + ")"; break;
    case ConceptKind::And:
    case ConceptKind::Or: {
      key = kind == ConceptKind::And ? "ObjectIntersectionOf(" : "ObjectUnionOf(";
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i) key += ' ';
        key += operands[i].key();
      }
      key += ')';
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      key = (kind == ConceptKind::Exists ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(") +
            role.str() + " " + operands[0].key() + ")";
      break;
  }
  auto node = std::make_shared<Node>(Node{kind, name, role, std::move(operands), std::move(key)});
  return Concept(std::move(node));
}

Concept Concept::top() {
  static const Concept t = make(ConceptKind::Top, {}, {}, {});
  return t;
}

Concept Concept::bottom() {
  static const Concept b = make(ConceptKind::Bottom, {}, {}, {});
  return b;
}

Concept Concept::atomic(ConceptName name) { return make(ConceptKind::Atomic, name, {}, {}); }

Concept Concept::negation(Concept c) { return make(ConceptKind::Not, {}, {}, {std::move(c)}); }

Concept Concept::naryOf(ConceptKind kind, std::vector<Concept> operands) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    if (op.kind() == kind) {
      flat.insert(flat.end(), op.operands().begin(), op.operands().end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kind == ConceptKind::And ? top() : bottom();
  if (flat.size() == 1) return flat.front();
  return make(kind, {}, {}, std::move(flat));
}

Concept Concept::conjunction(std::vector<Concept> operands) {
  return naryOf(ConceptKind::And, std::move(operands));
}

Concept Concept::disjunction(std::vector<Concept> operands) {
  return naryOf(ConceptKind::Or, std::move(operands));
}

Concept Concept::exists(RoleName role, Concept filler) {
  return make(ConceptKind::Exists, {}, role, {std::move(filler)});
}

Concept Concept::forall(RoleName role, Concept filler) {
  return make(ConceptKind::Forall, {}, role, {std::move(filler)});
}

Axiom Axiom::inclusion(Concept lhs, Concept rhs) {
  Axiom a;
  a.kind_ = AxiomKind::ConceptInclusion;
  a.key_ = std::make_shared<const std::string>("SubClassOf(" + lhs.key() + " " + rhs.key() + ")");
  a.lhs_ = std::move(lhs);
  a.rhs_ = std::move(rhs);
  return a;
}

Axiom Axiom::roleInclusion(RoleName sub, RoleName sup) {
  Axiom a;
  a.kind_ = AxiomKind::RoleInclusion;
  a.sub_ = sub;
  a.sup_ = sup;
  a.key_ =
      std::make_shared<const std::string>("SubObjectPropertyOf(" + sub.str() + " " + sup.str() + ")");
  return a;
}

Concept negateNNF(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top: return Concept::bottom();
    case ConceptKind::Bottom: return Concept::top();
    case ConceptKind::Atomic: return Concept::negation(c);
    case ConceptKind::Not: return toNNF(c.sub());
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(negateNNF(op));
      return c.is(ConceptKind::And) ? Concept::disjunction(std::move(ops))
                                    : Concept::conjunction(std::move(ops));
    }
    case ConceptKind::Exists: return Concept::forall(c.role(), negateNNF(c.sub()));
    case ConceptKind::Forall: return Concept::exists(c.role(), negateNNF(c.sub()));
  }
  return c;
}

Concept toNNF(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return c;
    case ConceptKind::Not: return negateNNF(c.sub());
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(toNNF(op));
      return c.is(ConceptKind::And) ? Concept::conjunction(std::move(ops))
                                    : Concept::disjunction(std::move(ops));
    }
    case ConceptKind::Exists: return Concept::exists(c.role(), toNNF(c.sub()));
    case ConceptKind::Forall: return Concept::forall(c.role(), toNNF(c.sub()));
  }
  return c;
}

int symbolCount(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return 1;
    case ConceptKind::Not: return 1 + symbolCount(c.sub());
    case ConceptKind::And:
    case ConceptKind::Or: {
      int n = static_cast<int>(c.operands().size()) - 1;
      for (const auto& op : c.operands()) n += symbolCount(op);
      return n;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: return 2 + symbolCount(c.sub());
  }
  return 0;
}

int symbolCount(const Axiom& a) {
  if (a.isRoleInclusion()) return 3;
  return 1 + symbolCount(a.lhs()) + symbolCount(a.rhs());
}

}  // namespace dlproof
