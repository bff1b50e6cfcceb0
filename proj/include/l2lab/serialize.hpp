#pragma once

#include <json.hpp>

#include "l2lab/closure.hpp"
#include "l2lab/dimension.hpp"
#include "l2lab/pattern.hpp"

namespace l2lab {

using json = nlohmann::ordered_json;

json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const json& j);

json to_json(const Rational& r);

/// {"kind":"explicit","elements":[...]} or {"kind":"factorial","count":K}.
json to_json(const IndexSetSpec& I);
IndexSetSpec index_set_from_json(const json& j);
/// Accepts inline JSON text or a path to a JSON file.
IndexSetSpec index_set_from_arg(const std::string& arg);

/// {"window":[...], "values":[[elem,bit],...]}.
json to_json(const Pattern& p);
Pattern pattern_from_json(GroupId g, const json& j);

json to_json(const DimensionEnclosure& e);

/// Nested {"op":"sum|product|scale|shift|atom", ...}.
json to_json(const Recipe& r);

/// Binary rendering of a rational in [0,2) to `bits` fractional digits
/// (round-down), marked approximate by the caller.
std::string binary_digits(const Rational& x, int bits);

GroupId group_from_string(const std::string& s);
std::string to_string(GroupId g);

}  // namespace l2lab
