#include "planar/prime_field.hpp"

#include "planar/errors.hpp"

namespace planar {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Residue mod_reduce(std::int64_t a, Residue p)
{
    auto r = a % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<Residue>(r);
}

Residue mod_pow(Residue a, std::uint64_t e, Residue p)
{
    std::uint64_t base = a % p;
    std::uint64_t acc = 1 % p;
    while (e != 0) {
        if (e & 1U)
            acc = acc * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<Residue>(acc);
}

Residue mod_inv(Residue a, Residue p)
{
    if (a % p == 0)
        throw DomainError("mod_inv: zero has no inverse");
    return mod_pow(a, p - 2, p);
}

int legendre(std::int64_t a, Residue p)
{
    const Residue r = mod_reduce(a, p);
    if (r == 0)
        return 0;
    return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Residue smallest_nonsquare(Residue p)
{
    for (Residue c = 2; c < p; ++c)
        if (legendre(c, p) == -1)
            return c;
    throw ParameterError("smallest_nonsquare: p must be an odd prime");
}

} // namespace planar
