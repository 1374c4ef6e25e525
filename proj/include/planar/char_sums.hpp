#pragma once

#include "planar/cyclotomic.hpp"
#include "planar/field_context.hpp"
#include "planar/function.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planar {

/// sum_{x in F_p} w^{x^2}
CyclotomicInt gauss_sum(Residue p);
/// sum_{x in F_p} (x/p) w^x, the second form of the same Gauss sum.
CyclotomicInt gauss_sum_legendre(Residue p);
/// p* = (-1/p) p as a constant.
CyclotomicInt p_star(Residue p);

/// W(a,b) = sum_z w^{Tr(a f(z) + b z)}. Throws DomainError for a == 0.
CyclotomicInt w_sum(const Field& field, const FiniteFunction& f, Element a, Element b);

/// W = epsilon * p * w^l
struct Decomposition {
    int epsilon = 1;
    Residue l = 0;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Tries all 2p candidates; nullopt when W is not of the form +-p w^l.
std::optional<Decomposition> decompose(const CyclotomicInt& w, Residue p);

/// {z in T : Tr(a f(z)) = 0}, in T order. Throws DomainError for a == 0.
std::vector<Element> z_set(const FieldContext& ctx, const FiniteFunction& f, Element a);

/// The unique y in T with Tr(b y) = 0. Throws DomainError for b == 0.
Element y_b(const FieldContext& ctx, Element b);

/// x* with f(x) = beta^2 f(x*); of the two solutions +-x* the lexicographically
/// smaller is returned. Throws ContractViolation if there are not exactly two.
Element x_star(const FieldContext& ctx, const FiniteFunction& f, Element x);

struct CharSumProfile {
    Element a;
    Element b;
    CyclotomicInt w;
    int epsilon = 1;
    Residue l = 0;
    std::vector<Element> z_a;
    Element y_b;
    /// n[i] for i in F_p; n[0] is n_0.
    std::vector<std::uint32_t> n;
    std::uint32_t n0 = 0;
    /// The constant relating n_i to n_0, recovered at i = 1; always 0 for planar f.
    std::int64_t c = 0;
};

/// Names of the profile invariants that fail (empty when all hold).
std::vector<std::string> profile_violations(const CharSumProfile& profile, Residue p);

/// Same as ni_profile without the invariant checks.
CharSumProfile compute_profile(const FieldContext& ctx, const FiniteFunction& f, Element a, Element b);

/// Computes everything for one (a, b), both nonzero. Throws NotPlanarForm if W
/// does not decompose, ContractViolation if a profile invariant fails.
CharSumProfile ni_profile(const FieldContext& ctx, const FiniteFunction& f, Element a, Element b);

using ElementPair = std::pair<Element, Element>;

/// decompose(w_sum(a, b)) for every pair; OpenMP kernel (threads == 0: runtime default).
std::vector<std::optional<Decomposition>> decompose_all(const Field& field, const FiniteFunction& f,
                                                        const std::vector<ElementPair>& pairs, int threads = 0);
std::vector<std::optional<Decomposition>> decompose_all_serial(const Field& field, const FiniteFunction& f,
                                                               const std::vector<ElementPair>& pairs);

} // namespace planar
