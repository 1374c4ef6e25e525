#pragma once

#include "planar/field_context.hpp"
#include "planar/function.hpp"

#include <optional>
#include <string>

namespace planar {

/// Two distinct x < y with the same difference value for shift a.
struct PlanarityWitness {
    Element a;
    Element x;
    Element y;
    Element delta;
};

struct PlanarityReport {
    bool is_planar = false;
    /// Present iff !is_planar. Always the smallest failing a, and for that a
    /// the first colliding y in enumeration order.
    std::optional<PlanarityWitness> witness;
};

/// f(x + a) - f(x) - f(a). Throws DomainError for a == 0.
Element delta(const Field& field, const FiniteFunction& f, Element a, Element x);

/// OpenMP kernel over a; threads == 0 uses the runtime default.
PlanarityReport is_planar(const Field& field, const FiniteFunction& f, int threads = 0);
/// Single-threaded reference; same result as is_planar.
PlanarityReport is_planar_serial(const Field& field, const FiniteFunction& f);

struct TwoToOneReport {
    bool holds = false;
    /// Empty when holds; otherwise names the first failed condition and the elements involved.
    std::string counterexample;
};

/// f(0) = 0, f(-x) = f(x), every nonzero value attained exactly twice on F_q^*,
/// never 0 on F_q^*; for homogeneous f also that f(y')/f(y) is never a square of
/// F_p^* for distinct y, y' in T.
TwoToOneReport check_two_to_one(const FieldContext& ctx, const FiniteFunction& f);

enum class Applicability { holds, fails, not_applicable };

/// d == 2 (mod p - 1) for planar homogeneous f; not_applicable otherwise.
Applicability check_degree_congruence(const Field& field, const FiniteFunction& f);

const char* to_string(Applicability a) noexcept;

} // namespace planar
