#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dlproof/names.hpp"

namespace dlproof {

enum class ConceptKind { Top, Bottom, Atomic, Not, And, Or, Exists, Forall };

// Immutable concept expression with shared structure.
//
// Construction canonicalizes: And/Or operands are flattened, deduplicated and
// sorted by their functional serialization, which doubles as the total order
// used everywhere expressions are compared. An And of a single operand is that
// operand; an empty And is Top and an empty Or is Bottom.
class Concept {
 public:
  static Concept top();
  static Concept bottom();
  static Concept atomic(ConceptName name);
  static Concept atomic(std::string_view name) { return atomic(ConceptName(name)); }
  static Concept negation(Concept c);
  static Concept conjunction(std::vector<Concept> operands);
  static Concept disjunction(std::vector<Concept> operands);
  static Concept exists(RoleName role, Concept filler);
  static Concept forall(RoleName role, Concept filler);

  ConceptKind kind() const { return node_->kind; }
  bool is(ConceptKind k) const { return node_->kind == k; }

  // Valid for Atomic.
  ConceptName name() const { return node_->name; }
  // Valid for Exists/Forall.
  RoleName role() const { return node_->role; }
  // Operand of Not, filler of Exists/Forall.
  const Concept& sub() const { return node_->operands.front(); }
  // Operands of And/Or (also the single operand of Not/Exists/Forall).
  std::span<const Concept> operands() const { return node_->operands; }

  // Functional-syntax serialization; the canonical ordering key.
  const std::string& key() const { return node_->key; }

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.node_ == b.node_ || a.node_->key == b.node_->key;
  }
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
    return a.node_->key <=> b.node_->key;
  }

 private:
  struct Node {
    ConceptKind kind;
    ConceptName name;
    RoleName role;
    std::vector<Concept> operands;
    std::string key;
  };

  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Concept make(ConceptKind kind, ConceptName name, RoleName role,
                      std::vector<Concept> operands);
  static Concept naryOf(ConceptKind kind, std::vector<Concept> operands);

  std::shared_ptr<const Node> node_;
};

enum class AxiomKind { ConceptInclusion, RoleInclusion };

// A concept inclusion lhs ⊑ rhs or a role inclusion sub ⊑ sup.
class Axiom {
 public:
  static Axiom inclusion(Concept lhs, Concept rhs);
  static Axiom roleInclusion(RoleName sub, RoleName sup);

  AxiomKind kind() const { return kind_; }
  bool isConceptInclusion() const { return kind_ == AxiomKind::ConceptInclusion; }
  bool isRoleInclusion() const { return kind_ == AxiomKind::RoleInclusion; }
  bool isAtomicCI() const {
    return isConceptInclusion() && lhs_.is(ConceptKind::Atomic) && rhs_.is(ConceptKind::Atomic);
  }

  const Concept& lhs() const { return lhs_; }
  const Concept& rhs() const { return rhs_; }
  RoleName sub() const { return sub_; }
  RoleName sup() const { return sup_; }

  const std::string& key() const { return *key_; }

  friend bool operator==(const Axiom& a, const Axiom& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
    return a.key() <=> b.key();
  }

 private:
  Axiom() = default;

  AxiomKind kind_ = AxiomKind::ConceptInclusion;
  Concept lhs_ = Concept::top();
  Concept rhs_ = Concept::top();
  RoleName sub_;
  RoleName sup_;
  std::shared_ptr<const std::string> key_;
};

// Negation normal form: negation pushed down to concept names.
Concept toNNF(const Concept& c);
// NNF of ¬c.
Concept negateNNF(const Concept& c);

// Number of symbol occurrences: names, ⊤, ⊥ and connectives. An n-ary ⊓/⊔
// contributes n-1 connectives, as in its infix rendering.
int symbolCount(const Concept& c);
int symbolCount(const Axiom& a);

}  // namespace dlproof

template <>
struct std::hash<dlproof::Concept> {
  std::size_t operator()(const dlproof::Concept& c) const {
    return std::hash<std::string>{}(c.key());
  }
};

template <>
struct std::hash<dlproof::Axiom> {
  std::size_t operator()(const dlproof::Axiom& a) const {
    return std::hash<std::string>{}(a.key());
  }
};
