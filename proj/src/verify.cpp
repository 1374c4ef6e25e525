#include "planar/verify.hpp"

#include "planar/char_sums.hpp"
#include "planar/errors.hpp"
#include "planar/pg2.hpp"
#include "planar/planarity.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace planar {

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::vector<Element> random_transversal(const FieldContext& ctx, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Residue> scalar(1, ctx.p() - 1);
    const Field& field = ctx.field();
    std::vector<Element> out;
    for (auto y : ctx.transversal())
        out.push_back(field.scale(scalar(rng), y));
    return out;
}

namespace {

// A check body returns an empty string on success, otherwise the failure.
using Body = std::function<std::string()>;

void run_check(VerifyReport& report, std::string name, const Body& body)
{
    VerifyCheck c{std::move(name), false, false, {}};
    try {
        c.detail = body();
        c.passed = c.detail.empty();
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
}

void skip_check(VerifyReport& report, std::string name, std::string why)
{
    report.checks.push_back({std::move(name), true, true, std::move(why)});
}

std::vector<Element> nonzero(const Field& field)
{
    std::vector<Element> out;
    for (std::uint32_t i = 1; i < field.q(); ++i)
        out.push_back({i});
    return out;
}

} // namespace

VerifyReport verify_all(const FieldContext& ctx, const FiniteFunction& f, const VerifyOptions& options)
{
    const Field& field = ctx.field();
    const Residue p = field.p();
    const auto elems = nonzero(field);
    VerifyReport report;

    run_check(report, "planar", [&] {
        const auto r = is_planar(field, f, options.threads);
        if (r.is_planar)
            return std::string();
        const auto& w = *r.witness;
        return "Delta_a collides at a = " + field.to_string(w.a) + ", x = " + field.to_string(w.x) +
               ", y = " + field.to_string(w.y);
    });
    run_check(report, "homogeneous", [&] {
        return detect_homogeneity(field, f).is_homogeneous ? std::string() : std::string("no d with f(lx) = l^d f(x)");
    });

    run_check(report, "unique y_b with Tr(b y_b) = 0", [&] {
        for (auto b : elems) {
            std::size_t hits = 0;
            for (auto y : ctx.transversal())
                hits += field.trace(field.mul(b, y)) == 0;
            if (hits != 1)
                return "b = " + field.to_string(b) + " has " + std::to_string(hits) + " zero-trace representatives";
        }
        return std::string();
    });
    run_check(report, "two-to-one", [&] { return check_two_to_one(ctx, f).counterexample; });
    run_check(report, "degree congruence d = 2 mod p-1", [&] {
        const auto a = check_degree_congruence(field, f);
        return a == Applicability::holds ? std::string() : std::string("degree congruence ") + to_string(a);
    });

    run_check(report, "gauss sum", [&] {
        const auto g = gauss_sum(p);
        if (g != gauss_sum_legendre(p))
            return std::string("the two forms differ");
        if (g * g != p_star(p))
            return "G^2 = " + (g * g).to_string();
        return std::string();
    });
    run_check(report, "legendre sums", [&] {
        std::int64_t total = 0;
        for (Residue i = 0; i < p; ++i)
            total += legendre(i, p);
        if (total != 0)
            return "sum (i/p) = " + std::to_string(total);
        for (Residue l = 0; l < p; ++l) {
            std::int64_t s = 0;
            for (Residue i = 0; i < p; ++i)
                s += legendre(std::int64_t{i} * (std::int64_t{i} - l), p);
            if (s != (l == 0 ? std::int64_t{p} : 0) - 1)
                return "sum (i(i-l)/p) = " + std::to_string(s) + " at l = " + std::to_string(l);
        }
        return std::string();
    });

    run_check(report, "W(a,b) = eps p w^l", [&] {
        std::vector<ElementPair> pairs;
        for (auto a : elems)
            for (std::uint32_t b = 0; b < field.q(); ++b)
                pairs.emplace_back(a, Element{b});
        const auto dec = decompose_all(field, f, pairs, options.threads);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (!dec[i])
                return "fails at a = " + field.to_string(pairs[i].first) + ", b = " + field.to_string(pairs[i].second);
        return std::string();
    });

    run_check(report, "|Z_a| in {0,2}", [&] {
        for (auto a : elems) {
            const auto size = z_set(ctx, f, a).size();
            if (size != 0 && size != 2)
                return "|Z_a| = " + std::to_string(size) + " at a = " + field.to_string(a);
        }
        return std::string();
    });
    run_check(report, "x* pairing", [&] {
        for (auto x : elems)
            x_star(ctx, f, x);
        return std::string();
    });

    const FiniteFunction square = from_monomial(field, 2);
    if (f == square) {
        run_check(report, "Tr(beta f(x)) = 0 locus", [&] {
            for (auto x : elems) {
                const auto key = monic_coset_key(field, x);
                const bool on_axes = key == monic_coset_key(field, field.one()) || key == monic_coset_key(field, ctx.beta());
                if ((field.trace(field.mul(ctx.beta(), f(x))) == 0) != on_axes)
                    return "x = " + field.to_string(x);
            }
            return std::string();
        });
    } else {
        skip_check(report, "Tr(beta f(x)) = 0 locus", "stated for x^2 only");
    }

    run_check(report, "n_i structure", [&] {
        for (auto a : elems)
            for (auto b : elems)
                ni_profile(ctx, f, a, b);
        return std::string();
    });

    run_check(report, "S_t oval", [&] {
        for (auto t : elems) {
            const auto pts = s_t(ctx, f, t);
            if (pts.size() != std::size_t(p) + 1)
                return "|S_t| = " + std::to_string(pts.size()) + " at t = " + field.to_string(t);
            if (!is_oval(pts, p).is_oval)
                return "three collinear points at t = " + field.to_string(t);
        }
        return std::string();
    });
    if (p > 3) {
        run_check(report, "S_t conic", [&] {
            for (auto t : elems) {
                const auto rep = fit_conic(s_t(ctx, f, t), p);
                for (const auto& c : rep.checks)
                    if (!c.passed)
                        return c.name + " fails at t = " + field.to_string(t);
            }
            return std::string();
        });
        if (is_normalized(ctx, f)) {
            run_check(report, "conic coefficients c01, c11", [&] {
                for (auto t : elems) {
                    auto rep = fit_conic(s_t(ctx, f, t), p);
                    const auto before = rep.checks.size();
                    check_conic_against_t(ctx, t, rep);
                    for (auto i = before; i < rep.checks.size(); ++i)
                        if (!rep.checks[i].passed)
                            return rep.checks[i].name + " fails at t = " + field.to_string(t);
                }
                return std::string();
            });
        } else {
            skip_check(report, "conic coefficients c01, c11", "f is not normalized");
        }
        run_check(report, "internal point <1,0,0>", [&] {
            for (auto t : elems) {
                const auto pts = s_t(ctx, f, t);
                const auto ip = internal_point_check(ctx, f, t, fit_conic(pts, p));
                for (const auto& c : ip.checks)
                    if (!c.passed)
                        return c.name + " fails at t = " + field.to_string(t);
            }
            return std::string();
        });
    } else {
        skip_check(report, "S_t conic", "four points do not determine a conic at p = 3");
        skip_check(report, "conic coefficients c01, c11", "needs the fitted conic");
        skip_check(report, "internal point <1,0,0>", "needs the fitted conic");
    }

    run_check(report, "transversal invariance", [&] {
        const FieldContext other = ctx.with_transversal(random_transversal(ctx, options.seed));
        for (auto a : elems) {
            if (z_set(ctx, f, a).size() != z_set(other, f, a).size())
                return "|Z_a| differs at a = " + field.to_string(a);
            for (auto b : elems)
                if (ni_profile(ctx, f, a, b).n != ni_profile(other, f, a, b).n)
                    return "n_i differ at a = " + field.to_string(a) + ", b = " + field.to_string(b);
        }
        for (auto t : elems) {
            const auto x = s_t(ctx, f, t);
            const auto y = s_t(other, f, t);
            if (std::set<ProjPoint>(x.begin(), x.end()) != std::set<ProjPoint>(y.begin(), y.end()))
                return "S_t differs at t = " + field.to_string(t);
        }
        return std::string();
    });
    return report;
}

} // namespace planar
