#pragma once

#include "planar/field_context.hpp"
#include "planar/function.hpp"
#include "planar/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace planar {

/// Point of PG(2,p); first nonzero coordinate is 1.
struct ProjPoint {
    std::array<Residue, 3> coords{};

    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Line [u,v,w] = {<x,y,z> : ux + vy + wz = 0}; same normalization as points.
struct ProjLine {
    std::array<Residue, 3> coefs{};

    friend auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

/// Throws DomainError for the zero triple.
ProjPoint make_point(std::array<std::int64_t, 3> coords, Residue p);
ProjLine make_line(std::array<std::int64_t, 3> coefs, Residue p);
bool incident(const ProjPoint& pt, const ProjLine& line, Residue p);

/// All p^2 + p + 1 lines, in lexicographic order of normalized coefficients.
std::vector<ProjLine> all_lines(Residue p);

/// P(x) = <Tr(tx)^2, Tr(f(x)), Tr(beta f(x))>; throws DomainError if the triple is zero.
ProjPoint oval_point(const FieldContext& ctx, const FiniteFunction& f, Element t, Element x);

/// S_t = {P(y) : y in T}, listed in T order. Throws ContractViolation on a zero
/// triple or a repeated point; DomainError for t == 0.
std::vector<ProjPoint> s_t(const FieldContext& ctx, const FiniteFunction& f, Element t);

struct OvalReport {
    bool is_oval = false;
    /// A line meeting the set in three or more points, when !is_oval.
    std::optional<ProjLine> violating_line;
};

OvalReport is_oval(const std::vector<ProjPoint>& points, Residue p);

struct NamedCheck {
    std::string name;
    bool passed = false;
};

/// Q(X) = sum_{i<=j} c_ij X_i X_j fitted through an oval, with c00 = 1.
struct ConicReport {
    /// c00, c01, c02, c11, c12, c22
    std::array<Residue, 6> c{};
    std::size_t nullspace_dim = 0;
    /// Quadratic part c11 X1^2 + c12 X1X2 + c22 X2^2 = lambda (h1 X1 + h2 X2)^2,
    /// (h1, h2) normalized to first nonzero entry 1. Set when that factorization exists.
    std::optional<Residue> lambda;
    std::array<Residue, 2> h{};
    /// The central collineation X -> X M (row vectors).
    MatrixFp m{0, 0, 3};
    std::vector<NamedCheck> checks;

    Residue c00() const { return c[0]; }
    Residue c01() const { return c[1]; }
    Residue c02() const { return c[2]; }
    Residue c11() const { return c[3]; }
    Residue c12() const { return c[4]; }
    Residue c22() const { return c[5]; }

    bool all_passed() const;
};

Residue evaluate_conic(const std::array<Residue, 6>& c, const ProjPoint& pt, Residue p);

/// Solves Q(P) = 0 over the points. Throws NotConic unless the solution space is
/// one-dimensional, ContractViolation if c00 = 0. Fills the t-independent checks.
ConicReport fit_conic(const std::vector<ProjPoint>& points, Residue p);

/// Appends the checks tied to t: c01 = -Tr(t^2) and c11 = (Tr(t^2)^2 - 4 t^{2(p+1)}) / 4.
/// Both values assume S_t was built from a normalized f.
void check_conic_against_t(const FieldContext& ctx, Element t, ConicReport& report);

/// Row-vector action X -> X M, renormalized.
ProjPoint apply_collineation(const MatrixFp& m, const ProjPoint& pt);

struct InternalPointReport {
    bool passed = false;
    std::vector<NamedCheck> checks;
};

/// <1,0,0> is internal to S_t: lines through it meet S_t in 0 or 2 points, M
/// permutes S_t swapping the two points on each such secant, and P(x), P(x*)
/// share a line through <1,0,0> for every x in T.
InternalPointReport internal_point_check(const FieldContext& ctx, const FiniteFunction& f, Element t,
                                         const ConicReport& report);

} // namespace planar
