#include "dlproof/pattern.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

namespace dlproof {

namespace {

struct Vertex {
  bool isRole;
  ConceptName cname;
  RoleName role;
};

class Canonicalizer {
 public:
  Canonicalizer(const Axiom& goal, const Ontology& axioms) : goal_(goal) {
    Signature sig = signatureOf(axioms);
    sig.merge(signatureOf(goal));
    for (auto c : sig.concepts) vertices_.push_back({false, c, {}});
    for (auto r : sig.roles) vertices_.push_back({true, {}, r});
    for (const auto& a : axioms) axioms_.push_back(a);

    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto& occ = occurrences_[v];
      for (std::size_t i = 0; i < axioms_.size(); ++i) {
        if (occursIn(v, axioms_[i])) occ.push_back(i);
      }
    }
  }

  std::string run() {
    std::vector<std::string> initial(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      std::string k = vertices_[v].isRole ? "r" : "c";
      if (!vertices_[v].isRole && goal_.isConceptInclusion()) {
        if (goal_.lhs() == Concept::atomic(vertices_[v].cname)) k += "L";
        if (goal_.rhs() == Concept::atomic(vertices_[v].cname)) k += "R";
      }
      initial[v] = k;
    }
    search(refine(rank(initial)));
    return best_.value_or(leafText({}));
  }

 private:
  bool occursIn(std::size_t v, const Axiom& a) const {
    return vertices_[v].isRole ? mentions(a, vertices_[v].role) : mentions(a, vertices_[v].cname);
  }

  static std::vector<int> rank(const std::vector<std::string>& keys) {
    std::vector<std::string> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                sorted.begin());
    }
    return out;
  }

  static std::string padded(int c) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%06d", c);
    return buf;
  }

  // Renaming that maps `focus` to a marker and every other name to its colour.
  Renaming colourRenaming(const std::vector<int>& colours, std::size_t focus) const {
    Renaming r;
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
      std::string label = u == focus ? "@" : "#" + padded(colours[u]);
      if (vertices_[u].isRole) {
        r.roles.emplace(vertices_[u].role, RoleName(label));
      } else {
        r.concepts.emplace(vertices_[u].cname, ConceptName(label));
      }
    }
    return r;
  }

  std::vector<int> refine(std::vector<int> colours) const {
    std::size_t classes = countClasses(colours);
    for (;;) {
      std::vector<std::string> keys(vertices_.size());
      for (std::size_t v = 0; v < vertices_.size(); ++v) {
        Renaming r = colourRenaming(colours, v);
        std::vector<std::string> contexts;
        for (std::size_t i : occurrences_.at(v)) contexts.push_back(rename(axioms_[i], r).key());
        std::sort(contexts.begin(), contexts.end());
        std::string k = padded(colours[v]);
        for (const auto& c : contexts) k += "|" + c;
        keys[v] = std::move(k);
      }
      colours = rank(keys);
      std::size_t next = countClasses(colours);
      if (next == classes) return colours;
      classes = next;
    }
  }

  static std::size_t countClasses(const std::vector<int>& colours) {
    std::vector<int> s = colours;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  void search(const std::vector<int>& colours) {
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < vertices_.size(); ++v) cells[colours[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (!target) {
      std::string text = leafText(colours);
      if (!best_ || text < *best_) best_ = std::move(text);
      return;
    }
    for (std::size_t chosen : *target) {
      std::vector<std::string> keys(vertices_.size());
      for (std::size_t v = 0; v < vertices_.size(); ++v) {
        keys[v] = padded(colours[v]) + (v == chosen ? "a" : "b");
      }
      search(refine(rank(keys)));
    }
  }

  std::string leafText(const std::vector<int>& colours) const {
    std::vector<std::size_t> order(vertices_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (!colours.empty()) {
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return colours[a] < colours[b]; });
    }
    Renaming r;
    int nc = 0;
    int nr = 0;
    for (std::size_t v : order) {
      if (vertices_[v].isRole) {
        r.roles.emplace(vertices_[v].role, RoleName("R" + std::to_string(nr++)));
      } else {
        r.concepts.emplace(vertices_[v].cname, ConceptName("C" + std::to_string(nc++)));
      }
    }
    std::vector<std::string> keys;
    for (const auto& a : axioms_) keys.push_back(rename(a, r).key());
    std::sort(keys.begin(), keys.end());
    std::string out = rename(goal_, r).key() + " <= {";
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) out += " ; ";
      out += keys[i];
    }
    return out + "}";
  }

  Axiom goal_;
  std::vector<Vertex> vertices_;
  std::vector<Axiom> axioms_;
  std::map<std::size_t, std::vector<std::size_t>> occurrences_;
  std::optional<std::string> best_;
};

}  // namespace

CanonicalPattern canonicalPattern(const Axiom& goal, const Ontology& axioms) {
  Canonicalizer c(goal, axioms);
  return CanonicalPattern{c.run()};
}

}  // namespace dlproof
