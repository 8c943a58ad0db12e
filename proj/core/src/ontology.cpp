#include "dlproof/ontology.hpp"

#include <algorithm>

#include "dlproof/error.hpp"

namespace dlproof {

bool Signature::contains(const Signature& other) const {
  return std::includes(concepts.begin(), concepts.end(), other.concepts.begin(),
                       other.concepts.end()) &&
         std::includes(roles.begin(), roles.end(), other.roles.begin(), other.roles.end());
}

Signature& Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
  return *this;
}

Signature Signature::intersect(const Signature& other) const {
  Signature out;
  std::set_intersection(concepts.begin(), concepts.end(), other.concepts.begin(),
                        other.concepts.end(), std::inserter(out.concepts, out.concepts.end()));
  std::set_intersection(roles.begin(), roles.end(), other.roles.begin(), other.roles.end(),
                        std::inserter(out.roles, out.roles.end()));
  return out;
}

const char* fragmentName(Fragment f) {
  switch (f) {
    case Fragment::ELH: return "ELH";
    case Fragment::ALCH: return "ALCH";
    case Fragment::Other: return "OTHER";
  }
  return "OTHER";
}

Ontology::Ontology(std::initializer_list<Axiom> axioms) {
  for (const auto& a : axioms) add(a);
}

void Ontology::add(Axiom a) {
  if (!insert(a)) throw DuplicateAxiom("duplicate axiom " + a.key());
}

bool Ontology::insert(Axiom a) {
  if (!keys_.insert(a.key()).second) return false;
  axioms_.push_back(std::move(a));
  return true;
}

Ontology Ontology::without(std::size_t index) const {
  Ontology out(name_);
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    if (i != index) out.insert(axioms_[i]);
  }
  return out;
}

Ontology Ontology::filtered(const std::function<bool(const Axiom&)>& keep) const {
  Ontology out(name_);
  for (const auto& a : axioms_) {
    if (keep(a)) out.insert(a);
  }
  return out;
}

std::string Ontology::setKey() const {
  std::vector<std::string> keys(keys_.begin(), keys_.end());
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) {
    out += k;
    out += '\n';
  }
  return out;
}

void collectSignature(const Concept& c, Signature& out) {
  switch (c.kind()) {
    case ConceptKind::Atomic: out.concepts.insert(c.name()); break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      out.roles.insert(c.role());
      collectSignature(c.sub(), out);
      break;
    default:
      for (const auto& op : c.operands()) collectSignature(op, out);
  }
}

void collectSignature(const Axiom& a, Signature& out) {
  if (a.isRoleInclusion()) {
    out.roles.insert(a.sub());
    out.roles.insert(a.sup());
  } else {
    collectSignature(a.lhs(), out);
    collectSignature(a.rhs(), out);
  }
}

Signature signatureOf(const Concept& c) {
  Signature s;
  collectSignature(c, s);
  return s;
}

Signature signatureOf(const Axiom& a) {
  Signature s;
  collectSignature(a, s);
  return s;
}

Signature signatureOf(const Ontology& o) {
  Signature s;
  for (const auto& a : o) collectSignature(a, s);
  return s;
}

Fragment fragmentOf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Atomic: return Fragment::ELH;
    case ConceptKind::Bottom:
    case ConceptKind::Not:
    case ConceptKind::Or:
    case ConceptKind::Forall: {
      for (const auto& op : c.operands()) {
        if (fragmentOf(op) == Fragment::Other) return Fragment::Other;
      }
      return Fragment::ALCH;
    }
    case ConceptKind::And:
    case ConceptKind::Exists: {
      Fragment f = Fragment::ELH;
      for (const auto& op : c.operands()) f = std::max(f, fragmentOf(op));
      return f;
    }
  }
  return Fragment::Other;
}

Fragment fragmentOf(const Axiom& a) {
  if (a.isRoleInclusion()) return Fragment::ELH;
  return std::max(fragmentOf(a.lhs()), fragmentOf(a.rhs()));
}

Fragment fragmentOf(const Ontology& o) {
  Fragment f = Fragment::ELH;
  for (const auto& a : o) f = std::max(f, fragmentOf(a));
  return f;
}

bool mentions(const Concept& c, ConceptName x) {
  if (c.is(ConceptKind::Atomic)) return c.name() == x;
  for (const auto& op : c.operands()) {
    if (mentions(op, x)) return true;
  }
  return false;
}

bool mentions(const Axiom& a, ConceptName x) {
  return a.isConceptInclusion() && (mentions(a.lhs(), x) || mentions(a.rhs(), x));
}

bool mentions(const Concept& c, RoleName r) {
  if ((c.is(ConceptKind::Exists) || c.is(ConceptKind::Forall)) && c.role() == r) return true;
  for (const auto& op : c.operands()) {
    if (mentions(op, r)) return true;
  }
  return false;
}

bool mentions(const Axiom& a, RoleName r) {
  if (a.isRoleInclusion()) return a.sub() == r || a.sup() == r;
  return mentions(a.lhs(), r) || mentions(a.rhs(), r);
}

Concept transform(const Concept& c, const std::function<Concept(const Concept&)>& f) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Atomic: return f(c);
    case ConceptKind::Not: return f(Concept::negation(transform(c.sub(), f)));
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(transform(op, f));
      return f(c.is(ConceptKind::And) ? Concept::conjunction(std::move(ops))
                                      : Concept::disjunction(std::move(ops)));
    }
    case ConceptKind::Exists: return f(Concept::exists(c.role(), transform(c.sub(), f)));
    case ConceptKind::Forall: return f(Concept::forall(c.role(), transform(c.sub(), f)));
  }
  return c;
}

Concept rename(const Concept& c, const Renaming& r) {
  return transform(c, [&](const Concept& e) -> Concept {
    if (e.is(ConceptKind::Atomic)) {
      auto it = r.concepts.find(e.name());
      if (it != r.concepts.end()) return Concept::atomic(it->second);
    } else if (e.is(ConceptKind::Exists) || e.is(ConceptKind::Forall)) {
      auto it = r.roles.find(e.role());
      if (it != r.roles.end()) {
        return e.is(ConceptKind::Exists) ? Concept::exists(it->second, e.sub())
                                         : Concept::forall(it->second, e.sub());
      }
    }
    return e;
  });
}

Axiom rename(const Axiom& a, const Renaming& r) {
  if (a.isRoleInclusion()) {
    auto map = [&](RoleName n) {
      auto it = r.roles.find(n);
      return it == r.roles.end() ? n : it->second;
    };
    return Axiom::roleInclusion(map(a.sub()), map(a.sup()));
  }
  return Axiom::inclusion(rename(a.lhs(), r), rename(a.rhs(), r));
}

Concept substitute(const Concept& c, ConceptName x, const Concept& by) {
  return transform(c, [&](const Concept& e) {
    return e.is(ConceptKind::Atomic) && e.name() == x ? by : e;
  });
}

}  // namespace dlproof
