#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>

namespace oracle {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_square_mod(std::int64_t a, std::uint32_t p)
{
    const std::int64_t r = ((a % p) + p) % p;
    for (std::int64_t x = 0; x < p; ++x)
        if (x * x % p == r)
            return true;
    return false;
}

int legendre(std::int64_t a, std::uint32_t p)
{
    if (((a % p) + p) % p == 0)
        return 0;
    return is_square_mod(a, p) ? 1 : -1;
}

F2::F2(std::uint32_t prime) : p(prime), s(0), q(prime * prime)
{
    for (std::uint32_t c = 1; c < p; ++c)
        if (!is_square_mod(c, p)) {
            s = c;
            break;
        }
}

std::uint32_t F2::add(std::uint32_t x, std::uint32_t y) const { return make(c0(x) + c0(y), c1(x) + c1(y)); }

std::uint32_t F2::neg(std::uint32_t x) const { return make(p - c0(x), p - c1(x)); }

std::uint32_t F2::mul(std::uint32_t x, std::uint32_t y) const
{
    const std::uint64_t a0 = c0(x), a1 = c1(x), b0 = c0(y), b1 = c1(y);
    return make(static_cast<std::uint32_t>((a0 * b0 + s * (a1 * b1 % p)) % p),
                static_cast<std::uint32_t>((a0 * b1 + a1 * b0) % p));
}

std::uint32_t F2::pow(std::uint32_t x, std::uint64_t e) const
{
    std::uint32_t r = make(1, 0);
    for (std::uint64_t i = 0; i < e; ++i)
        r = mul(r, x);
    return r;
}

std::uint32_t F2::inv(std::uint32_t x) const
{
    for (std::uint32_t y = 1; y < q; ++y)
        if (mul(x, y) == make(1, 0))
            return y;
    throw std::domain_error("oracle: no inverse");
}

std::uint32_t F2::trace(std::uint32_t x) const
{
    const auto t = add(x, pow(x, p));
    if (c1(t) != 0)
        throw std::logic_error("oracle: trace outside F_p");
    return c0(t);
}

std::uint64_t F2::order(std::uint32_t x) const
{
    std::uint32_t y = x;
    for (std::uint64_t k = 1;; ++k) {
        if (y == make(1, 0))
            return k;
        y = mul(y, x);
    }
}

std::uint32_t F2::primitive() const
{
    for (std::uint32_t x = 1; x < q; ++x)
        if (order(x) == q - 1)
            return x;
    throw std::logic_error("oracle: no primitive element");
}

std::vector<std::uint32_t> F2::transversal() const
{
    std::vector<std::uint32_t> out;
    std::vector<bool> seen(q, false);
    for (std::uint32_t x = 1; x < q; ++x) {
        if (seen[x])
            continue;
        out.push_back(x);
        for (std::uint32_t l = 1; l < p; ++l)
            seen[mul(make(l, 0), x)] = true;
    }
    return out;
}

Table monomial(const F2& f, std::uint64_t k)
{
    Table t(f.q);
    for (std::uint32_t x = 0; x < f.q; ++x)
        t[x] = x == 0 ? 0 : f.pow(x, k);
    return t;
}

bool is_planar(const F2& f, const Table& t)
{
    for (std::uint32_t a = 1; a < f.q; ++a) {
        std::set<std::uint32_t> values;
        for (std::uint32_t x = 0; x < f.q; ++x)
            values.insert(f.sub(f.sub(t[f.add(x, a)], t[x]), t[a]));
        if (values.size() != f.q)
            return false;
    }
    return true;
}

bool is_homogeneous_deg2(const F2& f, const Table& t)
{
    for (std::uint32_t l = 1; l < f.p; ++l)
        for (std::uint32_t x = 0; x < f.q; ++x) {
            const auto lam = f.make(l, 0);
            if (t[f.mul(lam, x)] != f.mul(f.mul(lam, lam), t[x]))
                return false;
        }
    return true;
}

std::vector<Table> brute_force_search(const F2& f, bool normalized)
{
    const auto reps = f.transversal();
    const std::uint32_t one = f.make(1, 0);
    const std::uint32_t b = f.beta();
    const std::uint32_t g = f.primitive();

    // choices per rep: every nonzero value, or the single value forced by normalization
    std::vector<std::vector<std::uint32_t>> choices(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::optional<std::uint32_t> forced;
        if (normalized) {
            for (auto x : {one, b, g})
                for (std::uint32_t l = 1; l < f.p; ++l) {
                    const auto lam = f.make(l, 0);
                    if (f.mul(lam, x) == reps[i]) // f(l x) = l^2 x^2
                        forced = f.mul(f.mul(lam, lam), f.mul(x, x));
                }
        }
        if (forced)
            choices[i] = {*forced};
        else
            for (std::uint32_t v = 1; v < f.q; ++v)
                choices[i].push_back(v);
    }

    std::vector<Table> out;
    std::vector<std::size_t> pick(reps.size(), 0);
    while (true) {
        Table t(f.q, 0);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::uint32_t l = 1; l < f.p; ++l) {
                const auto lam = f.make(l, 0);
                t[f.mul(lam, reps[i])] = f.mul(f.mul(lam, lam), choices[i][pick[i]]);
            }
        if (is_planar(f, t))
            out.push_back(t);
        std::size_t k = 0;
        while (k < reps.size() && ++pick[k] == choices[k].size())
            pick[k++] = 0;
        if (k == reps.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> w_counts_by_cosets(const F2& f, const Table& t, std::uint32_t a, std::uint32_t b)
{
    std::vector<std::int64_t> counts(f.p, 0);
    ++counts[0]; // z = 0
    for (auto y : f.transversal()) {
        const std::int64_t A = f.trace(f.mul(a, t[y]));
        const std::int64_t B = f.trace(f.mul(b, y));
        for (std::int64_t l = 1; l < f.p; ++l)
            ++counts[(l * l % f.p * A + l * B) % f.p];
    }
    return counts;
}

std::vector<std::int64_t> canonical(std::vector<std::int64_t> counts)
{
    const auto last = counts.back();
    for (auto& c : counts)
        c -= last;
    return counts;
}

std::complex<double> numeric(const std::vector<std::int64_t>& counts)
{
    std::complex<double> acc = 0;
    const double n = static_cast<double>(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        acc += static_cast<double>(counts[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    return acc;
}

std::vector<std::uint32_t> oval_point(const F2& f, const Table& t, std::uint32_t tt, std::uint32_t x)
{
    const std::uint64_t tr = f.trace(f.mul(tt, x));
    std::vector<std::uint32_t> v{static_cast<std::uint32_t>(tr * tr % f.p), f.trace(t[x]), f.trace(f.mul(f.beta(), t[x]))};
    const auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c != 0; });
    if (lead == v.end())
        throw std::logic_error("oracle: zero point");
    std::uint32_t inv = 1;
    while (std::uint64_t{inv} * *lead % f.p != 1)
        ++inv;
    for (auto& c : v)
        c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % f.p);
    return v;
}

std::size_t max_collinear(const std::vector<std::vector<std::uint32_t>>& pts, std::uint32_t p)
{
    std::size_t best = std::min<std::size_t>(pts.size(), 2);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const auto& u = pts[i];
            const auto& v = pts[j];
            std::size_t on = 0;
            for (const auto& w : pts) {
                // det[u; v; w] == 0
                const std::int64_t d = std::int64_t(u[0]) * (std::int64_t(v[1]) * w[2] - std::int64_t(v[2]) * w[1]) -
                                       std::int64_t(u[1]) * (std::int64_t(v[0]) * w[2] - std::int64_t(v[2]) * w[0]) +
                                       std::int64_t(u[2]) * (std::int64_t(v[0]) * w[1] - std::int64_t(v[1]) * w[0]);
                on += ((d % p) + p) % p == 0;
            }
            best = std::max(best, on);
        }
    return best;
}

} // namespace oracle
