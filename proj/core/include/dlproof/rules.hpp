#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlproof {

enum class RuleId { Refl, Top, Hier, AndMinus, AndPlus, Exists, RoleHier, Asserted, Known, Forget };

struct InferenceRule {
  RuleId id = RuleId::Asserted;
  // Forgotten name for Forget steps; empty for the closing step of a
  // forgetting-based proof.
  std::string forgotten;

  static InferenceRule of(RuleId id) { return {id, {}}; }
  static InferenceRule forget(std::string name) { return {RuleId::Forget, std::move(name)}; }

  // "R-Hier", "Forget(B)", ...
  std::string str() const;

  friend bool operator==(const InferenceRule&, const InferenceRule&) = default;
};

struct RuleInfo {
  std::string id;
  std::string displayName;
  std::string description;
  std::vector<std::string> schematicPremises;
  std::string schematicConclusion;
};

// Metadata for a rule id as produced by InferenceRule::str(). "Forget" and
// "Forget(x)" resolve to the forgetting rule card; unknown ids yield nullopt.
std::optional<RuleInfo> ruleInfo(std::string_view id);

}  // namespace dlproof
