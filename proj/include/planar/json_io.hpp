#pragma once

#include "planar/cyclotomic.hpp"
#include "planar/field.hpp"
#include "planar/function.hpp"
#include "planar/pg2.hpp"

#include <json.hpp>

namespace planar {

using Json = nlohmann::json;

/// [a0, a1, ...]
Json element_to_json(const Field& field, Element x);
Element element_from_json(const Field& field, const Json& j);

/// Array of q coefficient vectors in enumeration order.
Json function_to_json(const Field& field, const FiniteFunction& f);
FiniteFunction function_from_json(const Field& field, const Json& j);

/// Coefficients of w^0..w^{p-1}; integers that do not fit in int64 become decimal strings.
Json cyclotomic_to_json(const CyclotomicInt& w);

Json point_to_json(const ProjPoint& pt);
Json line_to_json(const ProjLine& line);
Json checks_to_json(const std::vector<NamedCheck>& checks);

/// Pretty-printed with a trailing newline; re-parsing and re-rendering is byte-identical.
std::string render(const Json& j);

} // namespace planar
