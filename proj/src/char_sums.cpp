#include "planar/char_sums.hpp"

#include "planar/errors.hpp"

#include <omp.h>

namespace planar {

CyclotomicInt gauss_sum(Residue p)
{
    std::vector<std::int64_t> counts(p, 0);
    for (std::uint64_t x = 0; x < p; ++x)
        ++counts[x * x % p];
    return CyclotomicInt::from_exponent_counts(p, counts);
}

CyclotomicInt gauss_sum_legendre(Residue p)
{
    std::vector<std::int64_t> counts(p, 0);
    for (Residue x = 0; x < p; ++x)
        counts[x] = legendre(x, p);
    return CyclotomicInt::from_exponent_counts(p, counts);
}

CyclotomicInt p_star(Residue p) { return CyclotomicInt::integer(p, BigInt(legendre(-1, p)) * p); }

namespace {

CyclotomicInt w_sum_unchecked(const Field& field, const FiniteFunction& f, Element a, Element b,
                              std::vector<std::int64_t>& counts)
{
    std::fill(counts.begin(), counts.end(), 0);
    for (std::uint32_t z = 0; z < field.q(); ++z)
        ++counts[field.trace(field.add(field.mul(a, f({z})), field.mul(b, {z})))];
    return CyclotomicInt::from_exponent_counts(field.p(), counts);
}

} // namespace

CyclotomicInt w_sum(const Field& field, const FiniteFunction& f, Element a, Element b)
{
    if (a == field.zero())
        throw DomainError("w_sum: a must be nonzero");
    std::vector<std::int64_t> counts(field.p());
    return w_sum_unchecked(field, f, a, b, counts);
}

std::optional<Decomposition> decompose(const CyclotomicInt& w, Residue p)
{
    for (int eps : {1, -1}) {
        for (Residue l = 0; l < p; ++l) {
            if (BigInt(eps) * p * CyclotomicInt::root_power(p, l) == w)
                return Decomposition{eps, l};
        }
    }
    return std::nullopt;
}

std::vector<Element> z_set(const FieldContext& ctx, const FiniteFunction& f, Element a)
{
    const Field& field = ctx.field();
    if (a == field.zero())
        throw DomainError("z_set: a must be nonzero");
    std::vector<Element> out;
    for (auto z : ctx.transversal())
        if (field.trace(field.mul(a, f(z))) == 0)
            out.push_back(z);
    return out;
}

Element y_b(const FieldContext& ctx, Element b)
{
    const Field& field = ctx.field();
    if (b == field.zero())
        throw DomainError("y_b: b must be nonzero");
    for (auto y : ctx.transversal())
        if (field.trace(field.mul(b, y)) == 0)
            return y;
    throw ContractViolation("y_b: no zero-trace transversal element"); // impossible for a valid T
}

Element x_star(const FieldContext& ctx, const FiniteFunction& f, Element x)
{
    const Field& field = ctx.field();
    if (x == field.zero())
        throw DomainError("x_star: x must be nonzero");
    const Element target = field.div(f(x), field.mul(ctx.beta(), ctx.beta()));
    std::vector<Element> hits;
    for (std::uint32_t z = 1; z < field.q(); ++z)
        if (f({z}) == target)
            hits.push_back({z});
    if (hits.size() != 2 || hits[1] != field.neg(hits[0]))
        throw ContractViolation("x_star: expected exactly two solutions +-x* for x = " + field.to_string(x) + ", found " +
                                std::to_string(hits.size()));
    return hits[0];
}

std::vector<std::string> profile_violations(const CharSumProfile& pr, Residue p)
{
    std::vector<std::string> bad;
    if (BigInt(pr.epsilon) * p * CyclotomicInt::root_power(p, pr.l) != pr.w)
        bad.emplace_back("W = epsilon p w^l");
    const auto size = pr.z_a.size();
    if (size != 0 && size != 2)
        bad.emplace_back("|Z_a| in {0,2}");
    std::uint64_t total = 0;
    for (auto v : pr.n)
        total += v;
    if (total + size != std::uint64_t{p} + 1)
        bad.emplace_back("sum n_i = p + 1 - |Z_a|");
    const int delta_l = pr.l == 0 ? 1 : 0;
    if (pr.n0 != static_cast<std::uint32_t>(1 - delta_l) || pr.n[0] != pr.n0)
        bad.emplace_back("n_0 = 1 - delta_l");
    if (pr.epsilon != static_cast<int>(size) - 1)
        bad.emplace_back("epsilon = |Z_a| - 1");
    for (Residue i = 1; i < p; ++i) {
        const std::int64_t expected =
            1 - delta_l + pr.epsilon * legendre(std::int64_t{i} * (std::int64_t{i} - std::int64_t{pr.l}), p);
        if (static_cast<std::int64_t>(pr.n[i]) != expected) {
            bad.emplace_back("n_i = 1 - delta_l + epsilon (i(i-l)/p)");
            break;
        }
    }
    if (pr.c != 0)
        bad.emplace_back("c = 0");
    return bad;
}

CharSumProfile compute_profile(const FieldContext& ctx, const FiniteFunction& f, Element a, Element b)
{
    const Field& field = ctx.field();
    const Residue p = field.p();
    if (a == field.zero() || b == field.zero())
        throw DomainError("ni_profile: a and b must be nonzero");

    CharSumProfile pr{a, b, w_sum(field, f, a, b), 1, 0, z_set(ctx, f, a), y_b(ctx, b), std::vector<std::uint32_t>(p, 0)};
    const auto dec = decompose(pr.w, p);
    if (!dec)
        throw NotPlanarForm("W(a,b) = " + pr.w.to_string() + " is not of the form +-p w^l");
    pr.epsilon = dec->epsilon;
    pr.l = dec->l;

    for (auto y : ctx.transversal()) {
        const Residue ta = field.trace(field.mul(a, f(y)));
        if (ta == 0)
            continue;
        const std::uint64_t tb = field.trace(field.mul(b, y));
        // i = Tr(by)^2 / (-4 Tr(a f(y)))
        const Residue denom = mod_reduce(-4 * static_cast<std::int64_t>(ta), p);
        const auto i = static_cast<Residue>(tb * tb % p * mod_inv(denom, p) % p);
        ++pr.n[i];
    }
    pr.n0 = pr.n[0];
    pr.c = static_cast<std::int64_t>(pr.n[1]) - static_cast<std::int64_t>(pr.n0) -
           pr.epsilon * legendre(1 - static_cast<std::int64_t>(pr.l), p);
    return pr;
}

CharSumProfile ni_profile(const FieldContext& ctx, const FiniteFunction& f, Element a, Element b)
{
    auto pr = compute_profile(ctx, f, a, b);
    const auto bad = profile_violations(pr, ctx.p());
    if (!bad.empty())
        throw ContractViolation("ni_profile: invariant failed: " + bad.front());
    return pr;
}

std::vector<std::optional<Decomposition>> decompose_all_serial(const Field& field, const FiniteFunction& f,
                                                               const std::vector<ElementPair>& pairs)
{
    std::vector<std::optional<Decomposition>> out(pairs.size());
    std::vector<std::int64_t> counts(field.p());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == field.zero())
            throw DomainError("decompose_all: a must be nonzero");
        out[i] = decompose(w_sum_unchecked(field, f, pairs[i].first, pairs[i].second, counts), field.p());
    }
    return out;
}

std::vector<std::optional<Decomposition>> decompose_all(const Field& field, const FiniteFunction& f,
                                                        const std::vector<ElementPair>& pairs, int threads)
{
    for (const auto& pr : pairs)
        if (pr.first == field.zero())
            throw DomainError("decompose_all: a must be nonzero");
    std::vector<std::optional<Decomposition>> out(pairs.size());
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
    {
        std::vector<std::int64_t> counts(field.p());
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i)
            out[i] = decompose(w_sum_unchecked(field, f, pairs[i].first, pairs[i].second, counts), field.p());
    }
    return out;
}

} // namespace planar
