#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "muso/cube.hpp"
#include "muso/matousek.hpp"
#include "muso/matroid.hpp"
#include "muso/plcp.hpp"
#include "muso/realizability.hpp"

namespace muso {

using Json = nlohmann::json;

/// Malformed document; the message names the line or the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text, reporting syntax errors with their line number.
Json parse_json(const std::string& text);

// All formats list dimensions and elements 1-based.

/// {"n": int, "outmaps": [[dims], ...]} indexed by vertex bitset value.
Json to_json(const Orientation& o);
Orientation orientation_from_json(const Json& j);

/// {"n": int, "edges": [[d, d'], ...]}, loops omitted.
Json to_json(const InfluenceGraph& g);
InfluenceGraph graph_from_json(const Json& j);

/// {"n": int, "order": [1, 3, ..., "q"], "F": [...]}
Json to_json(const CyclicExtension& ext);
CyclicExtension extension_from_json(const Json& j);

/// {"n": int, "M": [["a/b", ...], ...], "q": ["a/b", ...]}
Json to_json(const PLCPInstance& inst);
PLCPInstance plcp_from_json(const Json& j);

/// {"kind": "G1" | "G2", "vertices": [x, y, z]}
Json to_json(const ForbiddenWitness& w);

}  // namespace muso
