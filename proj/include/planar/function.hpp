#pragma once

#include "planar/field.hpp"
#include "planar/field_context.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace planar {

/// A total map F_q -> F_q stored as its value table, indexed by Element::index.
class FiniteFunction {
public:
    FiniteFunction(const Field& field, std::vector<Element> table, std::string provenance = {});

    Element operator()(Element x) const noexcept { return table_[x.index]; }
    std::span<const Element> table() const noexcept { return table_; }
    std::uint32_t q() const noexcept { return static_cast<std::uint32_t>(table_.size()); }
    /// How the table was produced ("x^2", "do:...", "table", ...); informational only.
    const std::string& provenance() const noexcept { return provenance_; }

    friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) { return a.table_ == b.table_; }
    friend bool operator<(const FiniteFunction& a, const FiniteFunction& b) { return a.table_ < b.table_; }

private:
    std::vector<Element> table_;
    std::string provenance_;
};

FiniteFunction from_monomial(const Field& field, std::uint64_t k);

/// Sum of a_ij x^{p^i + p^j}; keys (i, j) with 0 <= i <= j <= n-1.
using DoCoefficients = std::map<std::pair<unsigned, unsigned>, Element>;
FiniteFunction from_do_coeffs(const Field& field, const DoCoefficients& coeffs);

/// Extends values on T by f(lambda y) = lambda^2 f(y), f(0) = 0.
FiniteFunction from_transversal_values(const FieldContext& ctx, std::span<const Element> values, std::string provenance = {});

struct HomogeneityCertificate {
    bool is_homogeneous = false;
    /// Smallest d in [0, p-2] with f(lambda x) = lambda^d f(x); set iff homogeneous.
    std::optional<unsigned> d;
};

HomogeneityCertificate detect_homogeneity(const Field& field, const FiniteFunction& f);

/// An F_p-linear map F_q -> F_q, given by the images of the polynomial basis 1, b, ..., b^{n-1}.
class AdditiveMap {
public:
    AdditiveMap(const Field& field, std::vector<Element> basis_images);

    static AdditiveMap identity(const Field& field);
    static AdditiveMap zero(const Field& field);
    static AdditiveMap multiplication(const Field& field, Element u);
    /// The unique map sending sources[i] to images[i]; sources must be an F_p-basis.
    static AdditiveMap from_images(const Field& field, std::span<const Element> sources, std::span<const Element> images);

    Element operator()(Element x) const noexcept { return table_[x.index]; }
    const std::vector<Element>& basis_images() const noexcept { return images_; }
    bool is_bijective() const noexcept { return bijective_; }

    /// (this o inner)(x) = this(inner(x))
    AdditiveMap compose(const Field& field, const AdditiveMap& inner) const;

    friend bool operator==(const AdditiveMap& a, const AdditiveMap& b) { return a.images_ == b.images_; }

private:
    std::vector<Element> images_;
    std::vector<Element> table_;
    bool bijective_ = false;
};

/// f2(x) = L2(f(L1(x))) + L3(x) + c
struct EquivalenceMap {
    AdditiveMap l1;
    AdditiveMap l2;
    AdditiveMap l3;
    Element c{};

    static EquivalenceMap identity(const Field& field);
};

/// Throws ParameterError if L1 or L2 is not bijective.
FiniteFunction apply_equivalence(const Field& field, const FiniteFunction& f, const EquivalenceMap& m);

/// Equivalent g with g(1) = 1, g(beta) = beta^2, g(gamma) = gamma^2, and the map that produced it.
///
/// Scales so f(1) = 1, takes the lexicographically first u with f(u) = beta^2,
/// sets L1: 1 -> 1, beta -> u, then L2: 1 -> 1, f(L1(gamma)) -> gamma^2.
/// Throws ContractViolation if f is not planar and homogeneous.
std::pair<FiniteFunction, EquivalenceMap> normalize(const FieldContext& ctx, const FiniteFunction& f);

/// f(1) = 1, f(beta) = beta^2 and f(gamma) = gamma^2.
bool is_normalized(const FieldContext& ctx, const FiniteFunction& f);

/// Coefficients c_0..c_{q-1} of the unique polynomial of degree < q with the given table.
std::vector<Element> interpolate(const Field& field, const FiniteFunction& f);
FiniteFunction evaluate_polynomial(const Field& field, std::span<const Element> coeffs);

} // namespace planar
