#pragma once

#include "planar/prime_field.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planar {

/// An element of F_{p^n}, identified by its position in the lexicographic
/// enumeration of coefficient vectors (a0, a1, ..., a_{n-1}), a0 most
/// significant. Index order is therefore lexicographic order.
struct Element {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Exact arithmetic in F_{p^n} = F_p[b]/(m(b)), p odd.
///
/// Coordinates are taken in the polynomial basis 1, b, ..., b^{n-1} of the
/// modulus m. Multiplication goes through log/antilog tables built from the
/// lexicographically first primitive element; addition through a full table
/// for q <= 1024 and coordinate-wise otherwise. Immutable after construction.
class Field {
public:
    /// Default modulus: b for n = 1, b^2 - s (s the smallest nonsquare) for
    /// n = 2, and the lexicographically first monic irreducible otherwise.
    Field(Residue p, unsigned n);
    /// Explicit monic modulus, coefficients low to high (size n + 1).
    Field(Residue p, std::vector<Residue> modulus);

    Residue p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<Residue>& modulus() const noexcept { return modulus_; }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {place_[0]}; }
    /// The basis element b (n >= 2).
    Element basis_generator() const;
    Element from_prime(Residue c) const noexcept { return {(c % p_) * place_[0]}; }
    Element from_coeffs(std::span<const Residue> coeffs) const;
    std::vector<Residue> coeffs(Element x) const;
    Residue coeff(Element x, unsigned i) const noexcept { return x.index / place_[i] % p_; }

    bool in_prime_field(Element x) const noexcept { return x.index % place_[0] == 0; }
    /// Throws DomainError if x is not in F_p.
    Residue to_prime(Element x) const;

    Element add(Element a, Element b) const noexcept
    {
        if (!add_table_.empty())
            return {add_table_[std::size_t(a.index) * q_ + b.index]};
        return add_slow(a, b);
    }
    Element neg(Element a) const noexcept { return {neg_[a.index]}; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept
    {
        if (a.index == 0 || b.index == 0)
            return zero();
        std::uint32_t e = log_[a.index] + log_[b.index];
        if (e >= q_ - 1)
            e -= q_ - 1;
        return {exp_[e]};
    }
    /// c * x for c in F_p.
    Element scale(Residue c, Element x) const noexcept { return mul(from_prime(c), x); }
    /// Throws DomainError on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const noexcept;

    /// Absolute trace to F_p.
    Residue trace(Element x) const noexcept { return trace_[x.index]; }

    /// The primitive element the log tables are built on (lexicographically first).
    Element primitive() const noexcept { return {exp_[1 % (q_ - 1)]}; }
    std::uint64_t order(Element x) const;

    /// "a0+a1*b+a2*b^2..." with every coordinate written out.
    std::string to_string(Element x) const;

private:
    void build();
    Element add_slow(Element a, Element b) const noexcept;
    Element mul_slow(Element a, Element b) const;
    Element pow_slow(Element a, std::uint64_t e) const;

    Residue p_;
    unsigned n_;
    std::uint32_t q_;
    std::vector<Residue> modulus_;
    std::vector<std::uint32_t> place_;  // place_[i] = p^{n-1-i}
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<Residue> trace_;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible over F_p.
bool is_irreducible(std::span<const Residue> poly, Residue p);

} // namespace planar
