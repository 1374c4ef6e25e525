#include "helpers.hpp"
#include "oracle.hpp"

#include "planar/errors.hpp"
#include "planar/field.hpp"
#include "planar/field_context.hpp"
#include "planar/linalg.hpp"
#include "planar/prime_field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace planar;
using testing::el;

TEST_CASE("prime field helpers")
{
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(mod_reduce(-1, 7) == 6);
    CHECK(mod_pow(3, 6, 7) == 1);
    CHECK(mod_inv(3, 7) == 5);
    CHECK_THROWS_AS(mod_inv(0, 7), DomainError);
    CHECK(smallest_nonsquare(3) == 2);
    CHECK(smallest_nonsquare(5) == 2);
    CHECK(smallest_nonsquare(7) == 3);
    CHECK(prime_factors(48) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("legendre symbol")
{
    for (Residue p : {3u, 5u, 7u, 11u, 13u})
        CHECK(legendre(1, p) == 1);
    CHECK(legendre(2, 3) == -1);
    int sum = 0;
    for (int i = 0; i < 7; ++i)
        sum += legendre(i, 7);
    CHECK(sum == 0);
    for (Residue p = 3; p < 50; ++p) {
        if (!oracle::is_prime(p))
            continue;
        for (std::int64_t a = -60; a < 60; ++a)
            CHECK(legendre(a, p) == oracle::legendre(a, p));
    }
}

TEST_CASE("F_{p^2} agrees with the schoolbook oracle")
{
    for (Residue p : {3u, 5u, 7u, 11u}) {
        const Field field(p, 2);
        const oracle::F2 ref(p);
        REQUIRE(field.q() == ref.q);
        CHECK(field.modulus() == std::vector<Residue>{p - ref.s, 0, 1});
        for (std::uint32_t x = 0; x < field.q(); ++x) {
            CHECK(field.trace({x}) == ref.trace(x));
            CHECK(field.neg({x}).index == ref.neg(x));
            if (x != 0)
                CHECK(field.inv({x}).index == ref.inv(x));
            for (std::uint32_t y = 0; y < field.q(); ++y) {
                CHECK(field.add({x}, {y}).index == ref.add(x, y));
                CHECK(field.mul({x}, {y}).index == ref.mul(x, y));
            }
        }
        CHECK(field.primitive().index == ref.primitive());
    }
}

TEST_CASE("element coordinates and rendering")
{
    const Field field(5, 2);
    for (std::uint32_t x = 0; x < field.q(); ++x) {
        const auto c = field.coeffs({x});
        CHECK(field.from_coeffs(c).index == x);
        CHECK(c[0] == x / 5);
    }
    CHECK(field.to_string(el(field, 3, 4)) == "3+4*b");
    CHECK(field.in_prime_field(field.from_prime(3)));
    CHECK_FALSE(field.in_prime_field(field.basis_generator()));
    CHECK(field.to_prime(field.from_prime(3)) == 3);
    CHECK_THROWS_AS(field.to_prime(field.basis_generator()), DomainError);
    CHECK_THROWS_AS(field.inv(field.zero()), DomainError);
}

TEST_CASE("generic extension degrees satisfy the field axioms")
{
    std::mt19937_64 rng(7);
    for (auto [p, n] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 3u}, {5u, 3u}, {3u, 5u}, {3u, 4u}}) {
        const Field field(p, n);
        CAPTURE(p);
        CAPTURE(n);
        CHECK(is_irreducible(field.modulus(), p));
        CHECK(field.order(field.primitive()) == field.q() - 1);
        std::uniform_int_distribution<std::uint32_t> pick(0, field.q() - 1);
        for (int i = 0; i < 300; ++i) {
            const Element a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c)));
            CHECK(field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)));
            CHECK(field.add(a, field.neg(a)) == field.zero());
            if (a != field.zero())
                CHECK(field.mul(a, field.inv(a)) == field.one());
            // trace = sum of the Frobenius conjugates
            Element conj = a, sum = field.zero();
            for (unsigned k = 0; k < n; ++k) {
                sum = field.add(sum, conj);
                conj = field.pow(conj, p);
            }
            CHECK(sum == field.from_prime(field.trace(a)));
        }
    }
}

TEST_CASE("is_irreducible")
{
    CHECK(is_irreducible(std::vector<Residue>{1, 0, 1}, 3));  // b^2 + 1
    CHECK_FALSE(is_irreducible(std::vector<Residue>{1, 0, 1}, 5)); // -1 is a square mod 5
    CHECK_FALSE(is_irreducible(std::vector<Residue>{0, 1, 1}, 3));
}

TEST_CASE("build_context canonical choices")
{
    const auto ctx = build_context(3);
    const Field& f = ctx.field();
    CHECK(ctx.s() == 2);
    CHECK(f.mul(ctx.beta(), ctx.beta()) == f.from_prime(2));
    const std::vector<Element> t{f.one(), el(f, 0, 1), el(f, 1, 1), el(f, 2, 1)};
    CHECK(ctx.transversal() == t);
    CHECK(ctx.gamma() == el(f, 1, 1));
    CHECK(f.order(ctx.beta()) == 4);
    CHECK(f.order(ctx.gamma()) == 8);
    CHECK(build_context(5).s() == 2);
    CHECK_THROWS_AS(build_context(2), ParameterError);
    CHECK_THROWS_AS(build_context(9), ParameterError);
}

TEST_CASE("trace examples at p = 3")
{
    const auto ctx = build_context(3);
    const Field& f = ctx.field();
    CHECK(ctx.trace(f.one()) == 2);
    CHECK(ctx.trace(ctx.beta()) == 0);
    CHECK(ctx.trace(el(f, 2, 1)) == 1);
}

TEST_CASE("coset_rep examples at p = 3")
{
    const auto ctx = build_context(3);
    const Field& f = ctx.field();
    auto r = ctx.coset_rep(el(f, 0, 2));
    CHECK(r.rep == ctx.beta());
    CHECK(r.scalar == 2);
    r = ctx.coset_rep(f.from_prime(2));
    CHECK(r.rep == f.one());
    CHECK(r.scalar == 2);
    r = ctx.coset_rep(el(f, 2, 2));
    CHECK(r.rep == el(f, 1, 1));
    CHECK(r.scalar == 2);
    CHECK_THROWS_AS(ctx.coset_rep(f.zero()), DomainError);
}

TEST_CASE("context invariants for p <= 13")
{
    for (Residue p : {3u, 5u, 7u, 11u, 13u}) {
        const auto ctx = build_context(p);
        const Field& f = ctx.field();
        CAPTURE(p);
        CHECK(f.pow(ctx.beta(), p - 1) == f.neg(f.one()));
        CHECK(legendre(ctx.s(), p) == -1);
        CHECK(f.order(ctx.gamma()) == f.q() - 1);
        CHECK(ctx.transversal().size() == p + 1);

        std::vector<int> hits(ctx.transversal().size(), 0);
        for (std::uint32_t x = 1; x < f.q(); ++x) {
            const auto r = ctx.coset_rep({x});
            CHECK(r.scalar != 0);
            CHECK(ctx.transversal()[r.slot] == r.rep);
            CHECK(f.scale(r.scalar, r.rep) == Element{x});
            ++hits[r.slot];
        }
        for (int h : hits)
            CHECK(h == static_cast<int>(p) - 1);

        // zero-trace elements are exactly beta F_p
        std::set<Residue> image;
        for (std::uint32_t x = 0; x < f.q(); ++x) {
            image.insert(ctx.trace({x}));
            const bool on_beta_line = f.coeff({x}, 0) == 0;
            CHECK((ctx.trace({x}) == 0) == on_beta_line);
        }
        CHECK(image.size() == p);

        for (std::uint32_t b = 1; b < f.q(); ++b) {
            int zeros = 0;
            for (auto y : ctx.transversal())
                zeros += ctx.trace(f.mul({b}, y)) == 0;
            CHECK(zeros == 1);
        }
    }
}

TEST_CASE("with_transversal")
{
    const auto ctx = build_context(5);
    const Field& f = ctx.field();
    auto t = ctx.transversal();
    for (auto& y : t)
        y = f.scale(3, y);
    const auto other = ctx.with_transversal(t);
    CHECK(other.transversal() == t);
    CHECK(other.coset_rep(f.one()).rep == f.from_prime(3));
    CHECK(other.coset_rep(f.one()).scalar == 2);

    auto dup = ctx.transversal();
    dup[1] = f.scale(2, dup[0]);
    CHECK_THROWS_AS(ctx.with_transversal(dup), ParameterError);
    auto short_t = ctx.transversal();
    short_t.pop_back();
    CHECK_THROWS_AS(ctx.with_transversal(short_t), ParameterError);
}

TEST_CASE("matrices over F_p")
{
    std::mt19937_64 rng(11);
    const Residue p = 7;
    std::uniform_int_distribution<Residue> pick(0, p - 1);
    CHECK(MatrixFp::identity(3, p).determinant() == 1);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixFp m(3, 3, p);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                m(r, c) = pick(rng);
        const auto inv = m.inverse();
        CHECK(inv.has_value() == (m.determinant() != 0));
        CHECK((m.rank() == 3) == (m.determinant() != 0));
        if (inv)
            CHECK(m * *inv == MatrixFp::identity(3, p));

        MatrixFp wide(2, 5, p);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 5; ++c)
                wide(r, c) = pick(rng);
        const auto kernel = wide.nullspace();
        CHECK(kernel.size() + wide.rank() == 5);
        for (const auto& v : kernel)
            for (std::size_t r = 0; r < 2; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t c = 0; c < 5; ++c)
                    acc += std::uint64_t{wide(r, c)} * v[c];
                CHECK(acc % p == 0);
            }
    }
}
