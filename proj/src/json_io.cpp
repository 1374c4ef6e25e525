#include "planar/json_io.hpp"

#include "planar/function_spec.hpp"

namespace planar {

Json element_to_json(const Field& field, Element x)
{
    Json out = Json::array();
    for (auto c : field.coeffs(x))
        out.push_back(c);
    return out;
}

Element element_from_json(const Field& field, const Json& j)
{
    if (!j.is_array() || j.size() != field.n())
        throw SpecSyntaxError("element must be an array of " + std::to_string(field.n()) + " integers", j.dump());
    std::vector<Residue> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= field.p())
            throw SpecSyntaxError("coordinate must be an integer in [0, p-1]", c.dump());
        coeffs.push_back(c.get<Residue>());
    }
    return field.from_coeffs(coeffs);
}

Json function_to_json(const Field& field, const FiniteFunction& f)
{
    Json out = Json::array();
    for (auto v : f.table())
        out.push_back(element_to_json(field, v));
    return out;
}

FiniteFunction function_from_json(const Field& field, const Json& j)
{
    if (!j.is_array() || j.size() != field.q())
        throw SpecSyntaxError("table must be an array of q = " + std::to_string(field.q()) + " elements",
                              j.is_array() ? std::to_string(j.size()) + " entries" : j.type_name());
    std::vector<Element> table;
    table.reserve(field.q());
    for (const auto& v : j)
        table.push_back(element_from_json(field, v));
    return {field, std::move(table), "table"};
}

Json cyclotomic_to_json(const CyclotomicInt& w)
{
    Json out = Json::array();
    for (const auto& c : w.coeffs()) {
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            out.push_back(static_cast<std::int64_t>(c));
        else
            out.push_back(c.str());
    }
    return out;
}

Json point_to_json(const ProjPoint& pt) { return Json(pt.coords); }

Json line_to_json(const ProjLine& line) { return Json(line.coefs); }

Json checks_to_json(const std::vector<NamedCheck>& checks)
{
    Json out = Json::object();
    for (const auto& c : checks)
        out[c.name] = c.passed;
    return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace planar
