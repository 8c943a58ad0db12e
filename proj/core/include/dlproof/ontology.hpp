#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "dlproof/concept.hpp"

namespace dlproof {

struct Signature {
  std::set<ConceptName> concepts;
  std::set<RoleName> roles;

  bool empty() const { return concepts.empty() && roles.empty(); }
  std::size_t size() const { return concepts.size() + roles.size(); }
  bool contains(const Signature& other) const;
  Signature& merge(const Signature& other);
  Signature intersect(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class Fragment { ELH, ALCH, Other };

const char* fragmentName(Fragment f);

// Ordered, duplicate-free axiom list. Axiom order is insertion order.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::string name) : name_(std::move(name)) {}
  Ontology(std::initializer_list<Axiom> axioms);

  // Throws DuplicateAxiom if an equal axiom is already present.
  void add(Axiom a);
  // Returns false (and leaves the ontology unchanged) on duplicates.
  bool insert(Axiom a);

  bool contains(const Axiom& a) const { return keys_.count(a.key()) != 0; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  std::size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }

  const std::string& name() const { return name_; }
  void setName(std::string n) { name_ = std::move(n); }

  // Copy without axiom `index`.
  Ontology without(std::size_t index) const;
  // Axioms satisfying `keep`, in order.
  Ontology filtered(const std::function<bool(const Axiom&)>& keep) const;

  // Axiom keys joined in sorted order; equal iff the axiom sets are equal.
  std::string setKey() const;

  auto begin() const { return axioms_.begin(); }
  auto end() const { return axioms_.end(); }

 private:
  std::string name_;
  std::vector<Axiom> axioms_;
  std::unordered_set<std::string> keys_;
};

Signature signatureOf(const Concept& c);
Signature signatureOf(const Axiom& a);
Signature signatureOf(const Ontology& o);
void collectSignature(const Concept& c, Signature& out);
void collectSignature(const Axiom& a, Signature& out);

Fragment fragmentOf(const Concept& c);
Fragment fragmentOf(const Axiom& a);
Fragment fragmentOf(const Ontology& o);

bool mentions(const Concept& c, ConceptName x);
bool mentions(const Axiom& a, ConceptName x);
bool mentions(const Concept& c, RoleName r);
bool mentions(const Axiom& a, RoleName r);

// Applies a renaming; names missing from the maps are kept.
struct Renaming {
  std::map<ConceptName, ConceptName> concepts;
  std::map<RoleName, RoleName> roles;
};
Concept rename(const Concept& c, const Renaming& r);
Axiom rename(const Axiom& a, const Renaming& r);

// Replaces every occurrence of concept name x by `by`.
Concept substitute(const Concept& c, ConceptName x, const Concept& by);
// Rebuilds `c` bottom-up through `f`, applied to every subconcept after its
// children were rebuilt.
Concept transform(const Concept& c, const std::function<Concept(const Concept&)>& f);

}  // namespace dlproof
