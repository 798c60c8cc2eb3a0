#pragma once

#include "cob1/hurwitz.hpp"

#include <json.hpp>

#include <string>

namespace cob1::io {

using json = nlohmann::ordered_json;

/// Document layout:
///   {"degree": 3, "mode": "so", "components": [
///      {"target_genus": 1,
///       "handles": [{"a": [1,2,0], "b": [0,2,1]}],
///       "branch_points": [{"cycle": [0,1,2], "sign": 1}]}]}
/// Permutations are 0-indexed image arrays; cycles are lists of distinct
/// sheet indices. "sign" is required in "so" documents and forbidden in "o"
/// documents.
json to_json(const BranchedCoveringSet& s);

/// Structural decoding; collects all schema violations and throws
/// InvalidDataError when any are present. Semantic validity is a separate
/// step (validate()).
BranchedCoveringSet set_from_json(const json& doc);

std::string serialize(const BranchedCoveringSet& s, bool pretty = true);
BranchedCoveringSet parse_document(const std::string& text);

/// Reads a document from a file path, or from stdin when the path is "-".
BranchedCoveringSet load_document(const std::string& path);
void save_document(const BranchedCoveringSet& s, const std::string& path);

} // namespace cob1::io
