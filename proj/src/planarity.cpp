#include "planar/planarity.hpp"

#include "planar/errors.hpp"

#include <atomic>
#include <limits>
#include <vector>

#include <omp.h>

namespace planar {

namespace {

// Witness for one shift, or nullopt if x -> Delta_a f(x) is injective.
std::optional<PlanarityWitness> first_collision(const Field& field, const FiniteFunction& f, Element a,
                                                std::vector<std::int64_t>& seen)
{
    const std::uint32_t q = field.q();
    std::fill(seen.begin(), seen.end(), -1);
    const Element fa = f(a);
    for (std::uint32_t x = 0; x < q; ++x) {
        const Element d = field.sub(field.sub(f(field.add({x}, a)), f({x})), fa);
        if (seen[d.index] >= 0)
            return PlanarityWitness{a, {static_cast<std::uint32_t>(seen[d.index])}, {x}, d};
        seen[d.index] = x;
    }
    return std::nullopt;
}

} // namespace

Element delta(const Field& field, const FiniteFunction& f, Element a, Element x)
{
    if (a == field.zero())
        throw DomainError("delta: shift a must be nonzero");
    return field.sub(field.sub(f(field.add(x, a)), f(x)), f(a));
}

PlanarityReport is_planar_serial(const Field& field, const FiniteFunction& f)
{
    std::vector<std::int64_t> seen(field.q());
    for (std::uint32_t a = 1; a < field.q(); ++a) {
        if (auto w = first_collision(field, f, {a}, seen))
            return {false, w};
    }
    return {true, std::nullopt};
}

PlanarityReport is_planar(const Field& field, const FiniteFunction& f, int threads)
{
    const std::int64_t q = field.q();
    std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
    {
        std::vector<std::int64_t> seen(q);
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t a = 1; a < q; ++a) {
            if (a > best.load(std::memory_order_relaxed))
                continue;
            if (first_collision(field, f, {static_cast<std::uint32_t>(a)}, seen)) {
                auto cur = best.load();
                while (a < cur && !best.compare_exchange_weak(cur, a)) {
                }
            }
        }
    }

    const auto a = best.load();
    if (a == std::numeric_limits<std::int64_t>::max())
        return {true, std::nullopt};
    std::vector<std::int64_t> seen(q);
    return {false, first_collision(field, f, {static_cast<std::uint32_t>(a)}, seen)};
}

TwoToOneReport check_two_to_one(const FieldContext& ctx, const FiniteFunction& f)
{
    const Field& field = ctx.field();
    if (f(field.zero()) != field.zero())
        return {false, "f(0) = " + field.to_string(f(field.zero())) + " != 0"};
    for (std::uint32_t x = 1; x < field.q(); ++x) {
        if (f({x}) != f(field.neg({x})))
            return {false, "f(-x) != f(x) at x = " + field.to_string({x})};
        if (f({x}) == field.zero())
            return {false, "f(x) = 0 at nonzero x = " + field.to_string({x})};
    }
    std::vector<std::uint32_t> multiplicity(field.q(), 0);
    for (std::uint32_t x = 1; x < field.q(); ++x)
        ++multiplicity[f({x}).index];
    for (std::uint32_t v = 1; v < field.q(); ++v)
        if (multiplicity[v] != 0 && multiplicity[v] != 2)
            return {false, "value " + field.to_string({v}) + " attained " + std::to_string(multiplicity[v]) + " times"};

    if (detect_homogeneity(field, f).is_homogeneous) {
        const auto& t = ctx.transversal();
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (i == j)
                    continue;
                const Element ratio = field.div(f(t[j]), f(t[i]));
                if (field.in_prime_field(ratio) && legendre(field.to_prime(ratio), field.p()) == 1)
                    return {false, "f(y')/f(y) is a square of F_p^* for y = " + field.to_string(t[i]) +
                                       ", y' = " + field.to_string(t[j])};
            }
    }
    return {true, {}};
}

Applicability check_degree_congruence(const Field& field, const FiniteFunction& f)
{
    const auto cert = detect_homogeneity(field, f);
    if (!cert.is_homogeneous || !is_planar(field, f).is_planar)
        return Applicability::not_applicable;
    return (*cert.d % (field.p() - 1)) == (2 % (field.p() - 1)) ? Applicability::holds : Applicability::fails;
}

const char* to_string(Applicability a) noexcept
{
    switch (a) {
    case Applicability::holds:
        return "holds";
    case Applicability::fails:
        return "fails";
    case Applicability::not_applicable:
        break;
    }
    return "not_applicable";
}

} // namespace planar
