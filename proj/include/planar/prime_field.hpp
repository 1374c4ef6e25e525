#pragma once

#include <cstdint>
#include <vector>

namespace planar {

/// A residue modulo an odd prime p, always kept in [0, p-1].
using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

Residue mod_reduce(std::int64_t a, Residue p);
Residue mod_pow(Residue a, std::uint64_t e, Residue p);
/// Throws DomainError for a == 0 (mod p).
Residue mod_inv(Residue a, Residue p);

/// Legendre symbol (a/p) via Euler's criterion: 0, +1 or -1.
int legendre(std::int64_t a, Residue p);

Residue smallest_nonsquare(Residue p);

} // namespace planar
