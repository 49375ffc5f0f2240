#pragma once

#include "ambigine/design.hpp"
#include "ambigine/dynamics.hpp"
#include "ambigine/mobius.hpp"
#include "ambigine/rationalize.hpp"
#include "ambigine/update.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace ambigine::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "ambigine/v1";

// Envelope: { "schema": "ambigine/v1", "kind": ..., "body": {...} }.
struct Envelope {
  std::string kind;
  Json body;
};

Envelope parse_envelope(const Json& document);
Envelope load_envelope(const std::string& path);
Json envelope(const std::string& kind, Json body);

// Either a plain act (over states) or an extended act (over states x signals).
struct ActEntry {
  std::optional<Act> act;
  std::optional<ExtendedAct> extended;
};

ExtremePriorSet parse_prior_set(const Json& body);
MobiusBelief parse_mobius(const Json& body);
AmbiguousPrior parse_prior_like(const Json& body);  // extremes or masses
std::map<std::string, ActEntry> parse_acts(const Json& body, std::size_t states,
                                           std::size_t signals);
BeliefProfile parse_profile(const Json& body);
ProductStructure parse_product(const Json& body);
PersuasionInstance parse_persuasion(const Json& body);
std::vector<std::vector<Rat>> parse_targets(const Json& body, const PersuasionInstance& instance);

Rat parse_rat(const Json& value);
std::vector<Rat> parse_rat_vector(const Json& value);

// Rendering. float_mode switches rationals to 12-significant-digit decimals.
Json rat_json(const Rat& value, bool float_mode = false);
Json rat_vector_json(const std::vector<Rat>& values, bool float_mode = false);
Json posterior_json(const PosteriorSet& posterior, bool float_mode = false);
Json state_belief_json(const StateBelief& belief, bool float_mode = false);
Json prior_set_body(const ExtremePriorSet& prior);
Json decomposition_json(const SimpleDecomposition& decomposition, bool float_mode = false);
Json certificate_json(const DesignCertificate& certificate, const PersuasionInstance& instance,
                      bool float_mode = false);

}  // namespace ambigine::io
