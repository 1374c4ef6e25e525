#include "planar/field.hpp"

#include "planar/errors.hpp"

#include <limits>

namespace planar {

namespace {

using Poly = std::vector<Residue>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, Residue p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<Residue>((a[shift + i] + (p - lead) * b[i]) % p);
        trim(a);
    }
    return a;
}

// All monic polynomials of the given degree, in lexicographic order of (c0, ..., c_{d-1}).
Poly monic_from_counter(std::uint64_t counter, unsigned degree, Residue p)
{
    Poly out(degree + 1, 0);
    out[degree] = 1;
    for (unsigned i = degree; i-- > 0;) {
        out[i] = static_cast<Residue>(counter % p);
        counter /= p;
    }
    return out;
}

Poly default_modulus(Residue p, unsigned n)
{
    if (n == 1)
        return {0, 1};
    if (n == 2)
        return {p - smallest_nonsquare(p), 0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i)
        count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        auto m = monic_from_counter(c, n, p);
        if (is_irreducible(m, p))
            return m;
    }
    throw ParameterError("no irreducible modulus found"); // unreachable for prime p
}

} // namespace

bool is_irreducible(std::span<const Residue> poly, Residue p)
{
    const Poly m(poly.begin(), poly.end());
    if (m.empty() || m.back() != 1)
        return false;
    const unsigned degree = static_cast<unsigned>(m.size() - 1);
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t c = 0; c < count; ++c)
            if (poly_mod(m, monic_from_counter(c, d, p), p).empty())
                return false;
    }
    return degree >= 1;
}

Field::Field(Residue p, unsigned n) : Field(p, (n == 0 || !is_prime(p) || p == 2) ? Poly{} : default_modulus(p, n))
{
}

Field::Field(Residue p, std::vector<Residue> modulus) : p_(p), n_(0), q_(1), modulus_(std::move(modulus))
{
    if (p < 3 || !is_prime(p))
        throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    if (modulus_.size() < 2)
        throw ParameterError("extension degree must be at least 1");
    for (auto& c : modulus_) {
        if (c >= p)
            throw ParameterError("modulus coefficient out of range");
    }
    if (!is_irreducible(modulus_, p))
        throw ParameterError("modulus is not monic irreducible");
    n_ = static_cast<unsigned>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n_; ++i) {
        q *= p;
        if (q > (std::uint64_t{1} << 24))
            throw ParameterError("field too large for table arithmetic");
    }
    q_ = static_cast<std::uint32_t>(q);
    build();
}

void Field::build()
{
    place_.assign(n_, 1);
    for (unsigned i = n_ - 1; i-- > 0;)
        place_[i] = place_[i + 1] * p_;

    neg_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
        std::uint32_t out = 0;
        for (unsigned i = 0; i < n_; ++i) {
            const Residue c = coeff({x}, i);
            out += ((p_ - c) % p_) * place_[i];
        }
        neg_[x] = out;
    }
    if (q_ <= 1024) {
        add_table_.resize(std::size_t(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(add_slow({a}, {b}).index);
    }

    // First primitive element in lexicographic order.
    const std::uint64_t group = q_ - 1;
    const auto factors = prime_factors(group);
    Element gen{};
    for (std::uint32_t x = 1; x < q_; ++x) {
        bool primitive = true;
        for (auto r : factors) {
            if (pow_slow({x}, group / r) == one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = {x};
            break;
        }
    }
    exp_.resize(group == 0 ? 1 : group);
    log_.assign(q_, 0);
    Element acc = one();
    for (std::uint32_t e = 0; e < group; ++e) {
        exp_[e] = acc.index;
        log_[acc.index] = e;
        acc = mul_slow(acc, gen);
    }
    if (group == 1)
        exp_[0] = one().index;

    trace_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
        Element sum = zero();
        Element conj{x};
        for (unsigned i = 0; i < n_; ++i) {
            sum = add(sum, conj);
            conj = pow(conj, p_);
        }
        trace_[x] = coeff(sum, 0);
    }
}

Element Field::basis_generator() const
{
    if (n_ < 2)
        throw DomainError("basis_generator: F_p has no proper basis element b");
    return {place_[1]};
}

Element Field::from_coeffs(std::span<const Residue> coeffs) const
{
    if (coeffs.size() != n_)
        throw ParameterError("expected " + std::to_string(n_) + " coordinates, got " + std::to_string(coeffs.size()));
    std::uint32_t index = 0;
    for (unsigned i = 0; i < n_; ++i) {
        if (coeffs[i] >= p_)
            throw ParameterError("coordinate " + std::to_string(coeffs[i]) + " out of range mod " + std::to_string(p_));
        index += coeffs[i] * place_[i];
    }
    return {index};
}

std::vector<Residue> Field::coeffs(Element x) const
{
    std::vector<Residue> out(n_);
    for (unsigned i = 0; i < n_; ++i)
        out[i] = coeff(x, i);
    return out;
}

Residue Field::to_prime(Element x) const
{
    if (!in_prime_field(x))
        throw DomainError("element " + to_string(x) + " is not in F_p");
    return coeff(x, 0);
}

Element Field::inv(Element a) const
{
    if (a.index == 0)
        throw DomainError("inverse of zero");
    const std::uint32_t l = log_[a.index];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Element Field::pow(Element a, std::uint64_t e) const noexcept
{
    if (e == 0)
        return one();
    if (a.index == 0)
        return zero();
    const std::uint64_t l = (std::uint64_t{log_[a.index]} * (e % (q_ - 1))) % (q_ - 1);
    return {exp_[l]};
}

std::uint64_t Field::order(Element x) const
{
    if (x.index == 0)
        throw DomainError("order of zero");
    std::uint64_t ord = q_ - 1;
    for (auto r : prime_factors(q_ - 1)) {
        while (ord % r == 0 && pow(x, ord / r) == one())
            ord /= r;
    }
    return ord;
}

std::string Field::to_string(Element x) const
{
    std::string out = std::to_string(coeff(x, 0));
    for (unsigned i = 1; i < n_; ++i) {
        out += '+';
        out += std::to_string(coeff(x, i));
        out += "*b";
        if (i > 1)
            out += '^' + std::to_string(i);
    }
    return out;
}

Element Field::add_slow(Element a, Element b) const noexcept
{
    std::uint32_t out = 0;
    for (unsigned i = 0; i < n_; ++i)
        out += ((coeff(a, i) + coeff(b, i)) % p_) * place_[i];
    return {out};
}

Element Field::mul_slow(Element a, Element b) const
{
    Poly prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        const std::uint64_t ai = coeff(a, i);
        if (ai == 0)
            continue;
        for (unsigned j = 0; j < n_; ++j)
            prod[i + j] = static_cast<Residue>((prod[i + j] + ai * coeff(b, j)) % p_);
    }
    auto r = poly_mod(prod, modulus_, p_);
    r.resize(n_, 0);
    return from_coeffs(r);
}

Element Field::pow_slow(Element a, std::uint64_t e) const
{
    Element acc = one();
    while (e != 0) {
        if (e & 1U)
            acc = mul_slow(acc, a);
        a = mul_slow(a, a);
        e >>= 1U;
    }
    return acc;
}

} // namespace planar
