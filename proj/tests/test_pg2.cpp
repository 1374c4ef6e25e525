#include "helpers.hpp"
#include "oracle.hpp"

#include "planar/errors.hpp"
#include "planar/pg2.hpp"
#include "planar/verify.hpp"

#include <doctest.h>

#include <set>

using namespace planar;
using testing::el;

TEST_CASE("projective normalization and incidence")
{
    CHECK(make_point({0, 3, 6}, 7).coords == std::array<Residue, 3>{0, 1, 2});
    CHECK(make_point({-2, 1, 0}, 5).coords == std::array<Residue, 3>{1, 2, 0});
    CHECK(make_line({0, 0, 4}, 5).coefs == std::array<Residue, 3>{0, 0, 1});
    CHECK_THROWS_AS(make_point({0, 7, 14}, 7), DomainError);
    for (Residue p : {3u, 5u, 7u}) {
        const auto lines = all_lines(p);
        CHECK(lines.size() == p * p + p + 1);
        CHECK(std::set<ProjLine>(lines.begin(), lines.end()).size() == lines.size());
        // every line has p + 1 points, every pair of points one line
        std::vector<ProjPoint> points;
        for (const auto& l : lines)
            points.push_back({l.coefs});
        for (const auto& l : lines) {
            const auto on = std::count_if(points.begin(), points.end(), [&](const ProjPoint& x) { return incident(x, l, p); });
            CHECK(on == p + 1);
        }
    }
}

TEST_CASE("S_t examples at p = 3")
{
    const auto ctx = build_context(3);
    const Field& f = ctx.field();
    const auto sq = from_monomial(f, 2);
    CHECK(oval_point(ctx, sq, f.one(), f.one()).coords == std::array<Residue, 3>{1, 2, 0});
    CHECK(oval_point(ctx, sq, f.one(), ctx.beta()).coords == std::array<Residue, 3>{0, 1, 0});
    const auto s = s_t(ctx, sq, f.one());
    CHECK(s.size() == 4);
    CHECK(s[0].coords == std::array<Residue, 3>{1, 2, 0});
    CHECK(s[1].coords == std::array<Residue, 3>{0, 1, 0});
    CHECK(is_oval(s, 3).is_oval);
    CHECK_THROWS_AS(s_t(ctx, sq, f.zero()), DomainError);
    CHECK_THROWS_AS(s_t(ctx, from_do_coeffs(f, {}), f.one()), ContractViolation);
}

TEST_CASE("trace decomposition of f(x)")
{
    for (Residue p : {3u, 5u, 7u, 11u, 13u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        const auto sq = from_monomial(f, 2);
        const Element half = f.inv(f.from_prime(2));
        const Element inv2b = f.inv(f.mul(f.from_prime(2), ctx.beta()));
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            const Element v = sq({x});
            const Element rebuilt = f.add(f.mul(half, f.from_prime(f.trace(v))),
                                          f.mul(inv2b, f.from_prime(f.trace(f.mul(ctx.beta(), v)))));
            CHECK(rebuilt == v);
        }
    }
}

TEST_CASE("S_t against the oracle, and the oval property")
{
    for (Residue p : {3u, 5u, 7u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        const oracle::F2 ref(p);
        const auto sq = from_monomial(f, 2);
        const auto table = testing::to_oracle(sq);
        for (std::uint32_t t = 1; t < f.q(); ++t) {
            const auto pts = s_t(ctx, sq, {t});
            std::vector<std::vector<std::uint32_t>> ref_pts;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto r = oracle::oval_point(ref, table, t, ctx.transversal()[i].index);
                CHECK(std::vector<std::uint32_t>(pts[i].coords.begin(), pts[i].coords.end()) == r);
                ref_pts.push_back(r);
            }
            CHECK(pts.size() == p + 1);
            CHECK(oracle::max_collinear(ref_pts, p) == 2);
            CHECK(is_oval(pts, p).is_oval);
        }
    }
}

TEST_CASE("is_oval rejects a full line")
{
    const Residue p = 5;
    std::vector<ProjPoint> pts;
    for (const auto& l : all_lines(p)) {
        const ProjPoint x{l.coefs};
        if (incident(x, {{0, 0, 1}}, p))
            pts.push_back(x);
    }
    pts.push_back(make_point({1, 1, 1}, p));
    CHECK(pts.size() == p + 2);
    const auto r = is_oval(pts, p);
    CHECK_FALSE(r.is_oval);
    REQUIRE(r.violating_line.has_value());
    const auto on = std::count_if(pts.begin(), pts.end(), [&](const ProjPoint& x) { return incident(x, *r.violating_line, p); });
    CHECK(on >= 3);
}

TEST_CASE("conic fit for x^2")
{
    {
        const auto ctx = build_context(5);
        const Field& f = ctx.field();
        const auto rep = fit_conic(s_t(ctx, from_monomial(f, 2), f.one()), 5);
        CHECK(rep.c00() == 1);
        CHECK(rep.c01() == 3);
        CHECK(rep.nullspace_dim == 1);
    }
    for (Residue p : {5u, 7u, 11u, 13u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        const auto sq = from_monomial(f, 2);
        for (std::uint32_t t = 1; t < f.q(); ++t) {
            const auto pts = s_t(ctx, sq, {t});
            auto rep = fit_conic(pts, p);
            check_conic_against_t(ctx, {t}, rep);
            CAPTURE(p);
            CAPTURE(t);
            for (const auto& c : rep.checks) {
                CAPTURE(c.name);
                CHECK(c.passed);
            }
            CHECK(rep.checks.size() == 8);
            for (const auto& x : pts)
                CHECK(evaluate_conic(rep.c, x, p) == 0);
            CHECK(std::uint64_t{rep.c12()} * rep.c12() % p == 4ull * rep.c11() * rep.c22() % p);
            REQUIRE(rep.lambda.has_value());
            CHECK(oracle::legendre(*rep.lambda, p) == -1);
        }
    }
}

TEST_CASE("p = 3 conic fit is underdetermined")
{
    const auto ctx = build_context(3);
    const auto pts = s_t(ctx, from_monomial(ctx.field(), 2), ctx.field().one());
    try {
        fit_conic(pts, 3);
        FAIL("expected NotConic");
    } catch (const NotConic& e) {
        CHECK(e.nullspace_dim() > 1);
    }
}

TEST_CASE("internal point and the involution M")
{
    for (Residue p : {5u, 7u, 11u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        const auto sq = from_monomial(f, 2);
        for (std::uint32_t t = 1; t < f.q(); t += (p == 11 ? 7 : 1)) {
            const auto pts = s_t(ctx, sq, {t});
            const auto rep = fit_conic(pts, p);
            CHECK(rep.m * rep.m == MatrixFp::identity(3, p));
            const auto ip = internal_point_check(ctx, sq, {t}, rep);
            CHECK(ip.passed);
            std::set<ProjPoint> image;
            for (const auto& x : pts)
                image.insert(apply_collineation(rep.m, x));
            CHECK(image == std::set<ProjPoint>(pts.begin(), pts.end()));
        }
    }
}

TEST_CASE("S_t does not depend on the transversal")
{
    for (Residue p : {5u, 7u, 11u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        const auto sq = from_monomial(f, 2);
        const auto other = ctx.with_transversal(random_transversal(ctx, 99));
        for (std::uint32_t t = 1; t < f.q(); ++t) {
            const auto a = s_t(ctx, sq, {t});
            const auto b = s_t(other, sq, {t});
            CHECK(std::set<ProjPoint>(a.begin(), a.end()) == std::set<ProjPoint>(b.begin(), b.end()));
        }
    }
}
