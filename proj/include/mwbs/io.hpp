#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mwbs/instance.hpp"

namespace mwbs {

using Json = nlohmann::json;

// Parse errors and shape errors surface as EmbeddingError(kMalformed); the
// remaining kinds come from PlaneDigraph / make_instance validation.
Instance decode_instance(std::string_view text, bool allow_zero = false);
Instance instance_from_json(const Json& doc, bool allow_zero = false);
Json instance_to_json(const Instance& inst);
// Sorted keys, no whitespace.
std::string encode_instance(const Instance& inst);

Json solution_to_json(const Instance& inst, const Solution& sol);
Solution solution_from_json(const Json& doc);

Json parse_json(std::string_view text);

}  // namespace mwbs
