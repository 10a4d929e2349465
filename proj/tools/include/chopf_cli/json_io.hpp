#pragma once

#include <optional>
#include <string>

#include "chopf/element.hpp"
#include "chopf/series.hpp"
#include "json.hpp"

namespace chopf::cli {

using Json = nlohmann::ordered_json;

/// {"algebra":"sym","basis":"e","terms":[{"index":[1,1],"coeff":"1"}, ...]}
Json to_json(const Element& x, const std::optional<std::string>& structure = std::nullopt);

/// Two-fold tensors use "left"/"right" per term, higher arities "indices".
/// Factors sharing one space are described by "algebra"/"basis"/"arity",
/// mixed factors by a "factors" list.
Json to_json(const Tensor& x, const std::optional<std::string>& structure = std::nullopt);

/// {"algebra":..,"basis":..,"cap":6,"variables":["T"],"coefficients":[{"exponent":[k],"terms":[..]}]}
Json to_json(const Series& s);

Element element_from_json(const Json& j);
Tensor tensor_from_json(const Json& j);
Series series_from_json(const Json& j);

/// Compact single-line rendering.
std::string dump(const Json& j);

} // namespace chopf::cli
