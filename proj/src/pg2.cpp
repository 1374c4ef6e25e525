#include "planar/pg2.hpp"

#include "planar/char_sums.hpp"
#include "planar/errors.hpp"

#include <algorithm>
#include <set>

namespace planar {

namespace {

template <typename Out>
Out normalize_triple(std::array<std::int64_t, 3> v, Residue p, const char* what)
{
    Out out{};
    std::array<Residue, 3> r{};
    for (int i = 0; i < 3; ++i)
        r[i] = mod_reduce(v[i], p);
    const auto lead = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
    if (lead == r.end())
        throw DomainError(std::string(what) + ": all coordinates zero");
    const std::uint64_t inv = mod_inv(*lead, p);
    for (int i = 0; i < 3; ++i)
        r[i] = static_cast<Residue>(r[i] * inv % p);
    if constexpr (std::is_same_v<Out, ProjPoint>)
        out.coords = r;
    else
        out.coefs = r;
    return out;
}

Residue half(Residue p) { return mod_inv(2, p); }

} // namespace

ProjPoint make_point(std::array<std::int64_t, 3> coords, Residue p)
{
    return normalize_triple<ProjPoint>(coords, p, "make_point");
}

ProjLine make_line(std::array<std::int64_t, 3> coefs, Residue p) { return normalize_triple<ProjLine>(coefs, p, "make_line"); }

bool incident(const ProjPoint& pt, const ProjLine& line, Residue p)
{
    std::uint64_t acc = 0;
    for (int i = 0; i < 3; ++i)
        acc += std::uint64_t{pt.coords[i]} * line.coefs[i];
    return acc % p == 0;
}

std::vector<ProjLine> all_lines(Residue p)
{
    std::vector<ProjLine> out;
    out.reserve(std::size_t(p) * p + p + 1);
    for (Residue v = 0; v < p; ++v)
        for (Residue w = 0; w < p; ++w)
            out.push_back({{1, v, w}});
    for (Residue w = 0; w < p; ++w)
        out.push_back({{0, 1, w}});
    out.push_back({{0, 0, 1}});
    return out;
}

ProjPoint oval_point(const FieldContext& ctx, const FiniteFunction& f, Element t, Element x)
{
    const Field& field = ctx.field();
    const std::int64_t ttx = field.trace(field.mul(t, x));
    const Element fx = f(x);
    return make_point({ttx * ttx, field.trace(fx), field.trace(field.mul(ctx.beta(), fx))}, field.p());
}

std::vector<ProjPoint> s_t(const FieldContext& ctx, const FiniteFunction& f, Element t)
{
    if (t == ctx.field().zero())
        throw DomainError("s_t: t must be nonzero");
    std::vector<ProjPoint> out;
    std::set<ProjPoint> seen;
    for (auto y : ctx.transversal()) {
        ProjPoint pt;
        try {
            pt = oval_point(ctx, f, t, y);
        } catch (const DomainError&) {
            throw ContractViolation("s_t: P(y) is the zero triple for y = " + ctx.field().to_string(y));
        }
        if (!seen.insert(pt).second)
            throw ContractViolation("s_t: repeated point for y = " + ctx.field().to_string(y));
        out.push_back(pt);
    }
    return out;
}

OvalReport is_oval(const std::vector<ProjPoint>& points, Residue p)
{
    for (const auto& line : all_lines(p)) {
        const auto hits = std::count_if(points.begin(), points.end(), [&](const ProjPoint& pt) { return incident(pt, line, p); });
        if (hits > 2)
            return {false, line};
    }
    return {true, std::nullopt};
}

Residue evaluate_conic(const std::array<Residue, 6>& c, const ProjPoint& pt, Residue p)
{
    const auto& x = pt.coords;
    const std::array<std::uint64_t, 6> monomials{
        std::uint64_t{x[0]} * x[0] % p, std::uint64_t{x[0]} * x[1] % p, std::uint64_t{x[0]} * x[2] % p,
        std::uint64_t{x[1]} * x[1] % p, std::uint64_t{x[1]} * x[2] % p, std::uint64_t{x[2]} * x[2] % p,
    };
    std::uint64_t acc = 0;
    for (int i = 0; i < 6; ++i)
        acc = (acc + monomials[i] * c[i]) % p;
    return static_cast<Residue>(acc);
}

bool ConicReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

ConicReport fit_conic(const std::vector<ProjPoint>& points, Residue p)
{
    MatrixFp system(points.size(), 6, p);
    for (std::size_t r = 0; r < points.size(); ++r) {
        std::array<Residue, 6> unit{};
        for (int k = 0; k < 6; ++k) {
            unit.fill(0);
            unit[k] = 1;
            system(r, k) = evaluate_conic(unit, points[r], p);
        }
    }
    const auto kernel = system.nullspace();
    if (kernel.size() != 1)
        throw NotConic("fit_conic: solution space has dimension " + std::to_string(kernel.size()), kernel.size());

    ConicReport rep;
    rep.nullspace_dim = 1;
    if (kernel[0][0] == 0)
        throw ContractViolation("fit_conic: c00 = 0, so <1,0,0> lies on the conic");
    const std::uint64_t scale = mod_inv(kernel[0][0], p);
    for (int k = 0; k < 6; ++k)
        rep.c[k] = static_cast<Residue>(kernel[0][k] * scale % p);

    const std::uint64_t c01 = rep.c01(), c02 = rep.c02(), c11 = rep.c11(), c12 = rep.c12(), c22 = rep.c22();
    const bool on_conic = std::all_of(points.begin(), points.end(),
                                      [&](const ProjPoint& pt) { return evaluate_conic(rep.c, pt, p) == 0; });
    rep.checks.push_back({"points satisfy Q = 0", on_conic});
    rep.checks.push_back({"c12^2 = 4 c11 c22", c12 * c12 % p == 4 * c11 % p * c22 % p});

    // symmetric matrix of Q: diagonal c_ii, off-diagonal c_ij / 2
    const std::uint64_t h = half(p);
    MatrixFp sym(3, 3, p);
    sym(0, 0) = rep.c00();
    sym(1, 1) = rep.c11();
    sym(2, 2) = rep.c22();
    sym(0, 1) = sym(1, 0) = static_cast<Residue>(c01 * h % p);
    sym(0, 2) = sym(2, 0) = static_cast<Residue>(c02 * h % p);
    sym(1, 2) = sym(2, 1) = static_cast<Residue>(c12 * h % p);
    rep.checks.push_back({"nondegenerate", sym.determinant() != 0});

    // lambda (h1 X1 + h2 X2)^2
    if (c11 != 0) {
        const std::uint64_t h2 = c12 * h % p * mod_inv(static_cast<Residue>(c11), p) % p;
        rep.lambda = static_cast<Residue>(c11);
        rep.h = {1, static_cast<Residue>(h2)};
        rep.checks.push_back({"quadratic part is lambda * square", c11 * h2 % p * h2 % p == c22});
    } else if (c22 != 0) {
        rep.lambda = static_cast<Residue>(c22);
        rep.h = {0, 1};
        rep.checks.push_back({"quadratic part is lambda * square", c12 == 0});
    } else {
        rep.checks.push_back({"quadratic part is lambda * square", false});
    }
    rep.checks.push_back({"lambda nonsquare", rep.lambda && legendre(*rep.lambda, p) == -1});

    rep.m = MatrixFp(3, 3, p);
    rep.m(0, 0) = p - 1;
    rep.m(1, 0) = static_cast<Residue>((p - c01) % p);
    rep.m(2, 0) = static_cast<Residue>((p - c02) % p);
    rep.m(1, 1) = 1;
    rep.m(2, 2) = 1;
    rep.checks.push_back({"M^2 = I", rep.m * rep.m == MatrixFp::identity(3, p)});
    return rep;
}

void check_conic_against_t(const FieldContext& ctx, Element t, ConicReport& report)
{
    const Field& field = ctx.field();
    const Residue p = field.p();
    const std::uint64_t tr_t2 = field.trace(field.mul(t, t));
    report.checks.push_back({"c01 = -Tr(t^2)", report.c01() == (p - tr_t2) % p});
    const std::uint64_t norm_sq = field.to_prime(field.pow(t, 2 * (std::uint64_t{p} + 1)));
    const std::uint64_t expected = (tr_t2 * tr_t2 % p + (p - 4 * norm_sq % p)) % p * mod_inv(4, p) % p;
    report.checks.push_back({"c11 = (Tr(t^2)^2 - 4 t^(2(p+1))) / 4", report.c11() == expected});
}

ProjPoint apply_collineation(const MatrixFp& m, const ProjPoint& pt)
{
    std::array<std::int64_t, 3> out{};
    for (int j = 0; j < 3; ++j) {
        std::uint64_t acc = 0;
        for (int i = 0; i < 3; ++i)
            acc += std::uint64_t{pt.coords[i]} * m(i, j);
        out[j] = static_cast<std::int64_t>(acc % m.p());
    }
    return make_point(out, m.p());
}

InternalPointReport internal_point_check(const FieldContext& ctx, const FiniteFunction& f, Element t,
                                         const ConicReport& report)
{
    const Field& field = ctx.field();
    const Residue p = field.p();
    const auto points = s_t(ctx, f, t);
    const std::set<ProjPoint> point_set(points.begin(), points.end());
    InternalPointReport out;

    bool zero_or_two = true;
    for (Residue v = 0; v <= p; ++v) {
        const ProjLine line = v < p ? ProjLine{{0, 1, v}} : ProjLine{{0, 0, 1}};
        const auto hits = std::count_if(points.begin(), points.end(), [&](const ProjPoint& pt) { return incident(pt, line, p); });
        zero_or_two = zero_or_two && (hits == 0 || hits == 2);
    }
    out.checks.push_back({"lines through <1,0,0> meet S_t in 0 or 2 points", zero_or_two});

    bool maps_onto = true;
    bool swaps = true;
    for (const auto& pt : points) {
        const ProjPoint image = apply_collineation(report.m, pt);
        maps_onto = maps_onto && point_set.count(image) == 1;
        // the image keeps (X1 : X2), so it is on the line through <1,0,0> and pt
        swaps = swaps && image != pt && apply_collineation(report.m, image) == pt;
    }
    out.checks.push_back({"M maps S_t onto itself", maps_onto});
    out.checks.push_back({"M swaps the points of each secant through <1,0,0>", swaps});

    bool star_collinear = true;
    for (auto y : ctx.transversal()) {
        const ProjPoint a = oval_point(ctx, f, t, y);
        const ProjPoint b = oval_point(ctx, f, t, x_star(ctx, f, y));
        const std::uint64_t lhs = std::uint64_t{a.coords[1]} * b.coords[2] % p;
        const std::uint64_t rhs = std::uint64_t{a.coords[2]} * b.coords[1] % p;
        star_collinear = star_collinear && lhs == rhs;
    }
    out.checks.push_back({"P(x), P(x*) and <1,0,0> collinear", star_collinear});

    out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const NamedCheck& c) { return c.passed; });
    return out;
}

} // namespace planar
