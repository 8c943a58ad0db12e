#pragma once

#include <chrono>
#include <cstdint>
#include <variant>

#include "dlproof/ontology.hpp"

namespace dlproof {

struct ForgettingFailure {
  enum class Reason { Timeout, Inexpressible };
  Reason reason;
  std::int64_t elapsedMs;
};

// Either the forgetting result or the reason it could not be computed.
using ForgettingResult = std::variant<Ontology, ForgettingFailure>;

inline constexpr std::chrono::milliseconds kDefaultForgettingTimeout{2000};

inline bool succeeded(const ForgettingResult& r) { return std::holds_alternative<Ontology>(r); }

const char* reasonName(ForgettingFailure::Reason r);

// Eliminates x from o while keeping every x-free consequence.
//
// Axioms that do not mention x are kept as they are. If x occurs with one
// polarity only it is replaced by ⊤ or ⊥. Otherwise the axioms mentioning x
// are clausified, with fresh definers standing for fillers that contain x,
// and saturated under resolution on x and role propagation. Definers are then
// eliminated again; a definer that depends on itself cannot be expressed
// without fixpoints and yields Inexpressible.
//
// A timeout of zero or less fails immediately. Throws FragmentError outside
// ALCH.
ForgettingResult forgetConceptName(const Ontology& o, ConceptName x,
                                   std::chrono::milliseconds timeout = kDefaultForgettingTimeout);

// Role forgetting for the cases that need no role conjunction: r used only
// existentially (with at most one told super-role) or only universally.
// Everything else is Inexpressible.
ForgettingResult forgetRoleName(const Ontology& o, RoleName r,
                                std::chrono::milliseconds timeout = kDefaultForgettingTimeout);

// Local rewriting with the ⊤/⊥ unit and zero laws, double negation, and
// removal of tautological axioms.
Concept simplify(const Concept& c);
Ontology simplify(const Ontology& o);

}  // namespace dlproof
