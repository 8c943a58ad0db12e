#include "dlproof/rules.hpp"

namespace dlproof {

std::string InferenceRule::str() const {
  switch (id) {
    case RuleId::Refl: return "R0-Refl";
    case RuleId::Top: return "R-Top";
    case RuleId::Hier: return "R-Hier";
    case RuleId::AndMinus: return "R-AndMinus";
    case RuleId::AndPlus: return "R-AndPlus";
    case RuleId::Exists: return "R-Exists";
    case RuleId::RoleHier: return "R-RoleHier";
    case RuleId::Asserted: return "Asserted";
    case RuleId::Known: return "Known";
    case RuleId::Forget: return forgotten.empty() ? "Forget" : "Forget(" + forgotten + ")";
  }
  return "Unknown";
}

std::optional<RuleInfo> ruleInfo(std::string_view id) {
  if (id == "R0-Refl") {
    return RuleInfo{"R0-Refl", "Reflexivity", "Every concept is subsumed by itself.", {}, "C ⊑ C"};
  }
  if (id == "R-Top") {
    return RuleInfo{"R-Top", "Top", "Every concept is subsumed by the top concept.", {}, "C ⊑ ⊤"};
  }
  if (id == "R-Hier") {
    return RuleInfo{"R-Hier", "Class Hierarchy",
                    "A subsumption chains with a told concept inclusion.",
                    {"C ⊑ D", "D ⊑ E"}, "C ⊑ E"};
  }
  if (id == "R-AndMinus") {
    return RuleInfo{"R-AndMinus", "Conjunction Decomposition",
                    "A subsumer that is a conjunction yields each of its conjuncts.",
                    {"C ⊑ D₁ ⊓ D₂"}, "C ⊑ Dᵢ"};
  }
  if (id == "R-AndPlus") {
    return RuleInfo{"R-AndPlus", "Conjunction Composition",
                    "Subsumers combine into a conjunction that occurs in the ontology.",
                    {"C ⊑ D₁", "C ⊑ D₂"}, "C ⊑ D₁ ⊓ D₂"};
  }
  if (id == "R-Exists") {
    return RuleInfo{"R-Exists", "Existential Propagation",
                    "A subsumer of an existential filler propagates through the role, "
                    "respecting the role hierarchy.",
                    {"C ⊑ ∃r.D", "D ⊑ E", "r ⊑ s"}, "C ⊑ ∃s.E"};
  }
  if (id == "R-RoleHier") {
    return RuleInfo{"R-RoleHier", "Role Hierarchy", "Role inclusions compose transitively.",
                    {"r ⊑ s", "s ⊑ t"}, "r ⊑ t"};
  }
  if (id == "Asserted") {
    return RuleInfo{"Asserted", "Asserted", "The axiom is stated in the ontology.", {}, "α"};
  }
  if (id == "Known") {
    return RuleInfo{"Known", "Known", "The axiom only uses names from the known signature.", {},
                    "α"};
  }
  if (id == "Forget" || (id.starts_with("Forget(") && id.ends_with(")"))) {
    std::string name =
        id == "Forget" ? std::string{} : std::string(id.substr(7, id.size() - 8));
    std::string desc = name.empty()
                           ? "The conclusion follows from the premises once all other names "
                             "have been forgotten."
                           : "The conclusion is a consequence of the premises that no longer "
                             "mentions the forgotten name " + name + ".";
    return RuleInfo{std::string(id), name.empty() ? "Forgetting" : "Forget " + name, desc,
                    {"α₁", "…", "αₙ"}, "β"};
  }
  return std::nullopt;
}

}  // namespace dlproof
