#pragma once

// JSON encodings of the library types. Readers throw SchemaViolation for
// malformed documents; mathematical validation errors pass through unchanged.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stasheff/canonical_basis.hpp"
#include "stasheff/cluster_atlas.hpp"
#include "stasheff/exact_algebra.hpp"
#include "stasheff/polygon.hpp"
#include "stasheff/polytope.hpp"
#include "stasheff/tropical_points.hpp"
#include "stasheff/weighted_graph.hpp"

namespace stasheff::json_io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Wraps a payload as {"format": 1, key: payload}.
json document(const std::string& key, json payload);
/// Checks the "format" field (when present) and returns doc[key], or doc itself
/// when it is not an object carrying that key.
const json& payload(const json& doc, const std::string& key);

json to_json(const Segment& s);
Segment segment_from_json(const json& j, int n_gon);

json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j, int n_gon);
/// "1-3,1-4" style chart descriptions.
Triangulation parse_chart(const std::string& text, int n_gon);

json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const json& j);

json to_json(const Lamination& l);
json to_json(const RationalLamination& l);
Lamination lamination_from_json(const json& j);
RationalLamination rational_lamination_from_json(const json& j);
std::vector<Lamination> laminations_from_json(const json& j);

json to_json(const TropicalCoords& c);
TropicalCoords coords_from_json(const json& j, int n_gon);

json to_json(const StasheffSpec& s);
StasheffSpec spec_from_json(const json& j);

json to_json(const Expansion& e);

json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const json& j);

json to_json(const Seed& s);
Seed seed_from_json(const json& j);

}  // namespace stasheff::json_io
