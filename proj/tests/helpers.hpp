#pragma once

#include "oracle.hpp"

#include "planar/field_context.hpp"
#include "planar/function.hpp"

#include <random>

namespace testing {

inline oracle::Table to_oracle(const planar::FiniteFunction& f)
{
    oracle::Table t;
    for (auto v : f.table())
        t.push_back(v.index);
    return t;
}

inline planar::FiniteFunction from_oracle(const planar::Field& field, const oracle::Table& t)
{
    std::vector<planar::Element> table;
    for (auto v : t)
        table.push_back({v});
    return {field, table, "oracle"};
}

inline planar::Element el(const planar::Field& field, std::uint32_t a0, std::uint32_t a1)
{
    const std::vector<planar::Residue> c{a0, a1};
    return field.from_coeffs(c);
}

/// Random additive bijection given by images of the basis 1, b.
inline planar::AdditiveMap random_bijection(const planar::Field& field, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(1, field.q() - 1);
    while (true) {
        planar::AdditiveMap m(field, {{pick(rng)}, {pick(rng)}});
        if (m.is_bijective())
            return m;
    }
}

inline planar::AdditiveMap random_additive(const planar::Field& field, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, field.q() - 1);
    return planar::AdditiveMap(field, {{pick(rng)}, {pick(rng)}});
}

} // namespace testing
