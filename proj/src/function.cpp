#include "planar/function.hpp"

#include "planar/errors.hpp"
#include "planar/linalg.hpp"
#include "planar/planarity.hpp"

namespace planar {

FiniteFunction::FiniteFunction(const Field& field, std::vector<Element> table, std::string provenance)
    : table_(std::move(table)), provenance_(std::move(provenance))
{
    if (table_.size() != field.q())
        throw ParameterError("function table must have q = " + std::to_string(field.q()) + " entries, got " +
                             std::to_string(table_.size()));
    for (auto v : table_)
        if (v.index >= field.q())
            throw ParameterError("function table entry out of range");
}

FiniteFunction from_monomial(const Field& field, std::uint64_t k)
{
    if (k == 0)
        throw ParameterError("monomial exponent must be >= 1");
    std::vector<Element> table(field.q());
    for (std::uint32_t x = 0; x < field.q(); ++x)
        table[x] = field.pow({x}, k);
    return {field, std::move(table), "x^" + std::to_string(k)};
}

FiniteFunction from_do_coeffs(const Field& field, const DoCoefficients& coeffs)
{
    std::vector<std::pair<std::uint64_t, Element>> terms;
    std::string provenance = "do:[";
    for (const auto& [ij, a] : coeffs) {
        const auto [i, j] = ij;
        if (i > j || j >= field.n())
            throw ParameterError("DO index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside 0 <= i <= j <= n-1");
        if (a.index >= field.q())
            throw ParameterError("DO coefficient out of range");
        std::uint64_t pi = 1;
        std::uint64_t pj = 1;
        for (unsigned e = 0; e < i; ++e)
            pi *= field.p();
        for (unsigned e = 0; e < j; ++e)
            pj *= field.p();
        terms.emplace_back(pi + pj, a);
        if (provenance.size() > 4)
            provenance += ',';
        provenance += "(" + std::to_string(i) + "," + std::to_string(j) + "," + field.to_string(a) + ")";
    }
    provenance += ']';
    std::vector<Element> table(field.q(), field.zero());
    for (std::uint32_t x = 0; x < field.q(); ++x)
        for (const auto& [e, a] : terms)
            table[x] = field.add(table[x], field.mul(a, field.pow({x}, e)));
    return {field, std::move(table), provenance};
}

FiniteFunction from_transversal_values(const FieldContext& ctx, std::span<const Element> values, std::string provenance)
{
    const Field& field = ctx.field();
    if (values.size() != ctx.transversal().size())
        throw ParameterError("need one value per transversal member");
    std::vector<Element> table(field.q(), field.zero());
    const Residue p = field.p();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Element y = ctx.transversal()[i];
        for (Residue lambda = 1; lambda < p; ++lambda) {
            const Residue sq = static_cast<Residue>(std::uint64_t{lambda} * lambda % p);
            table[field.scale(lambda, y).index] = field.scale(sq, values[i]);
        }
    }
    return {field, std::move(table), std::move(provenance)};
}

HomogeneityCertificate detect_homogeneity(const Field& field, const FiniteFunction& f)
{
    const Residue p = field.p();
    for (unsigned d = 0; d + 1 < p; ++d) {
        bool ok = true;
        for (Residue lambda = 2; lambda < p && ok; ++lambda) {
            const Element l = field.from_prime(lambda);
            const Element ld = field.from_prime(mod_pow(lambda, d, p));
            for (std::uint32_t x = 1; x < field.q(); ++x) {
                if (f(field.mul(l, {x})) != field.mul(ld, f({x}))) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok)
            return {true, d};
    }
    return {false, std::nullopt};
}

// AdditiveMap ---------------------------------------------------------------

namespace {

MatrixFp coordinate_matrix(const Field& field, std::span<const Element> columns)
{
    MatrixFp m(field.n(), columns.size(), field.p());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (unsigned r = 0; r < field.n(); ++r)
            m(r, c) = field.coeff(columns[c], r);
    return m;
}

} // namespace

AdditiveMap::AdditiveMap(const Field& field, std::vector<Element> basis_images) : images_(std::move(basis_images))
{
    if (images_.size() != field.n())
        throw ParameterError("additive map needs n basis images");
    for (auto v : images_)
        if (v.index >= field.q())
            throw ParameterError("additive map image out of range");
    table_.resize(field.q());
    for (std::uint32_t x = 0; x < field.q(); ++x) {
        Element acc = field.zero();
        for (unsigned i = 0; i < field.n(); ++i)
            acc = field.add(acc, field.scale(field.coeff({x}, i), images_[i]));
        table_[x] = acc;
    }
    bijective_ = coordinate_matrix(field, images_).rank() == field.n();
}

AdditiveMap AdditiveMap::identity(const Field& field) { return multiplication(field, field.one()); }

AdditiveMap AdditiveMap::zero(const Field& field) { return {field, std::vector<Element>(field.n(), field.zero())}; }

AdditiveMap AdditiveMap::multiplication(const Field& field, Element u)
{
    std::vector<Element> images;
    for (unsigned i = 0; i < field.n(); ++i)
        images.push_back(field.mul(u, field.pow(field.n() > 1 ? field.basis_generator() : field.one(), i)));
    return {field, std::move(images)};
}

AdditiveMap AdditiveMap::from_images(const Field& field, std::span<const Element> sources, std::span<const Element> images)
{
    if (sources.size() != field.n() || images.size() != field.n())
        throw ParameterError("from_images needs n sources and n images");
    const auto inv = coordinate_matrix(field, sources).inverse();
    if (!inv)
        throw ParameterError("from_images: sources are not a basis");
    // basis vector e_i = sum_k inv(k, i) * sources[k]
    std::vector<Element> basis_images;
    for (unsigned i = 0; i < field.n(); ++i) {
        Element acc = field.zero();
        for (unsigned k = 0; k < field.n(); ++k)
            acc = field.add(acc, field.scale((*inv)(k, i), images[k]));
        basis_images.push_back(acc);
    }
    return {field, std::move(basis_images)};
}

AdditiveMap AdditiveMap::compose(const Field& field, const AdditiveMap& inner) const
{
    std::vector<Element> images;
    for (auto v : inner.images_)
        images.push_back((*this)(v));
    return {field, std::move(images)};
}

EquivalenceMap EquivalenceMap::identity(const Field& field)
{
    return {AdditiveMap::identity(field), AdditiveMap::identity(field), AdditiveMap::zero(field), field.zero()};
}

FiniteFunction apply_equivalence(const Field& field, const FiniteFunction& f, const EquivalenceMap& m)
{
    if (!m.l1.is_bijective())
        throw ParameterError("apply_equivalence: L1 is not bijective");
    if (!m.l2.is_bijective())
        throw ParameterError("apply_equivalence: L2 is not bijective");
    std::vector<Element> table(field.q());
    for (std::uint32_t x = 0; x < field.q(); ++x)
        table[x] = field.add(field.add(m.l2(f(m.l1({x}))), m.l3({x})), m.c);
    return {field, std::move(table), f.provenance().empty() ? std::string{} : "equiv(" + f.provenance() + ")"};
}

std::pair<FiniteFunction, EquivalenceMap> normalize(const FieldContext& ctx, const FiniteFunction& f)
{
    const Field& field = ctx.field();
    if (!detect_homogeneity(field, f).is_homogeneous)
        throw ContractViolation("normalize: f is not homogeneous");
    if (!is_planar(field, f).is_planar)
        throw ContractViolation("normalize: f is not planar");
    const Element f1 = f(field.one());
    if (f1 == field.zero())
        throw ContractViolation("normalize: f(1) = 0");

    const AdditiveMap rescale = AdditiveMap::multiplication(field, field.inv(f1));
    const Element beta = ctx.beta();
    const Element beta_sq = field.mul(beta, beta);

    std::optional<Element> u;
    for (std::uint32_t x = 1; x < field.q(); ++x) {
        if (rescale(f({x})) == beta_sq) {
            u = Element{x};
            break;
        }
    }
    if (!u || field.in_prime_field(*u))
        throw ContractViolation("normalize: no u outside F_p with f(u) = beta^2");

    const std::vector<Element> basis{field.one(), beta};
    const AdditiveMap l1 = AdditiveMap::from_images(field, basis, std::vector<Element>{field.one(), *u});

    const Element gamma = ctx.gamma();
    const Element w = rescale(f(l1(gamma)));
    if (field.in_prime_field(w))
        throw ContractViolation("normalize: f(L1(gamma)) lies in F_p");
    const AdditiveMap fix_gamma = AdditiveMap::from_images(field, std::vector<Element>{field.one(), w},
                                                           std::vector<Element>{field.one(), field.mul(gamma, gamma)});
    const AdditiveMap l2 = fix_gamma.compose(field, rescale);

    EquivalenceMap map{l1, l2, AdditiveMap::zero(field), field.zero()};
    FiniteFunction g = apply_equivalence(field, f, map);
    if (g(field.one()) != field.one() || g(beta) != beta_sq || g(gamma) != field.mul(gamma, gamma))
        throw ContractViolation("normalize: prescribed values not reached");
    return {std::move(g), std::move(map)};
}

bool is_normalized(const FieldContext& ctx, const FiniteFunction& f)
{
    const Field& field = ctx.field();
    return f(field.one()) == field.one() && f(ctx.beta()) == field.mul(ctx.beta(), ctx.beta()) &&
           f(ctx.gamma()) == field.mul(ctx.gamma(), ctx.gamma());
}

std::vector<Element> interpolate(const Field& field, const FiniteFunction& f)
{
    // c_0 = f(0); c_k = -sum_x f(x) x^{q-1-k} for 1 <= k <= q-1 (with 0^0 = 1)
    const std::uint32_t q = field.q();
    std::vector<Element> coeffs(q, field.zero());
    coeffs[0] = f(field.zero());
    for (std::uint32_t k = 1; k < q; ++k) {
        Element acc = field.zero();
        for (std::uint32_t x = 0; x < q; ++x) {
            const Element power = (k == q - 1) ? field.one() : field.pow({x}, q - 1 - k);
            acc = field.add(acc, field.mul(f({x}), power));
        }
        coeffs[k] = field.neg(acc);
    }
    return coeffs;
}

FiniteFunction evaluate_polynomial(const Field& field, std::span<const Element> coeffs)
{
    std::vector<Element> table(field.q());
    for (std::uint32_t x = 0; x < field.q(); ++x) {
        Element acc = field.zero();
        for (std::size_t k = coeffs.size(); k-- > 0;)
            acc = field.add(field.mul(acc, {x}), coeffs[k]);
        table[x] = acc;
    }
    return {field, std::move(table), "polynomial"};
}

} // namespace planar
