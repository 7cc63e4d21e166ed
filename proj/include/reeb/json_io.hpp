#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reeb/connect_sum.hpp"
#include "reeb/index_jump.hpp"
#include "reeb/index_model.hpp"
#include "reeb/profiles.hpp"
#include "reeb/toric.hpp"
#include "reeb/two_orbit.hpp"

namespace reeb::io {

/// Insertion-ordered so that printed documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Parses text; malformed input raises ParseError.
Json parse(const std::string& text);
Json read_file(const std::string& path);

Json to_json(const OrbitIndexModel& model);
OrbitIndexModel model_from_json(const Json& j);
/// Accepts a single model object, an array of models, or {"models": [...]}.
std::vector<OrbitIndexModel> models_from_json(const Json& j);
Json to_json(const std::vector<OrbitIndexModel>& models);

Json to_json(const IndexJumpCertificate& cert);
IndexJumpCertificate certificate_from_json(const Json& j);
Json to_json(const SearchExhausted& exhausted);
Json to_json(const JumpVerification& verification);

Json to_json(const FacetWithSigns& facet);
FacetWithSigns facet_from_json(const Json& j);
/// Accepts a single facet, an array, or {"facets": [...]}.
std::vector<FacetWithSigns> facets_from_json(const Json& j);
Json to_json(const ReebDecomposition& decomp);
Json to_json(const Prop81Report& report);
Json to_json(const ToricProfile& profile);
Json to_json(const Theorem82Report& report);

Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);
/// {"ranks": {...}, "unknown": [...], "window": "lo:hi"}; "unknown" only when nonempty.
Json to_json(const GradedRanks& ranks);
/// Without a "window" member the window spans the listed degrees.
GradedRanks ranks_from_json(const Json& j);

std::vector<MorseBottComponent> components_from_json(const Json& j);
Json to_json(const std::vector<MorseBottComponent>& components);
Json to_json(const E1Page& page);
Json to_json(const Prop91Report& report);
Json to_json(const MorseReport& report);
Json to_json(const BrieskornProfile& profile);

Json to_json(const HypothesisCertificate& cert);
HypothesisCertificate hypothesis_from_json(const Json& j);
Json to_json(const FailureWitness& witness);
Json to_json(const std::vector<DegreeBounds>& bounds);
Json to_json(const Theorem127Result& result);

Json to_json(const ContradictionTrace& trace);
ContradictionTrace trace_from_json(const Json& j);
Json to_json(const Inconclusive& inconclusive);
Json to_json(const TraceCheck& check);
Json to_json(const ProfileCheckReport& report);

}  // namespace reeb::io
