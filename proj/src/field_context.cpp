#include "planar/field_context.hpp"

#include "planar/errors.hpp"

namespace planar {

std::uint32_t monic_coset_key(const Field& field, Element x)
{
    // key 0 for F_p^*, 1 + c for the coset of c + b
    const Residue a0 = field.coeff(x, 0);
    const Residue a1 = field.coeff(x, 1);
    if (a1 == 0)
        return 0;
    const Residue p = field.p();
    return 1 + static_cast<std::uint32_t>(std::uint64_t{a0} * mod_inv(a1, p) % p);
}

FieldContext build_context(Residue p)
{
    if (p < 3 || !is_prime(p))
        throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    FieldContext ctx;
    ctx.field_ = std::make_shared<const Field>(p, 2U);
    const Field& f = *ctx.field_;
    ctx.s_ = smallest_nonsquare(p);
    ctx.beta_ = f.basis_generator();
    ctx.gamma_ = f.primitive();
    ctx.transversal_.push_back(f.one());
    for (Residue c = 0; c < p; ++c)
        ctx.transversal_.push_back(f.add(f.from_prime(c), ctx.beta_));
    ctx.index_transversal();
    return ctx;
}

void FieldContext::index_transversal()
{
    const Field& f = *field_;
    const Residue p = f.p();
    if (transversal_.size() != std::size_t(p) + 1)
        throw ParameterError("transversal must have p + 1 elements");
    // scalar relating each T member to its monic key
    std::vector<std::int64_t> slot_for_key(p + 1, -1);
    std::vector<Residue> lead(p + 1, 0);
    for (std::size_t i = 0; i < transversal_.size(); ++i) {
        const Element y = transversal_[i];
        if (y == f.zero())
            throw ParameterError("transversal contains zero");
        const auto key = monic_coset_key(f, y);
        if (slot_for_key[key] != -1)
            throw ParameterError("transversal has two members in one coset");
        slot_for_key[key] = static_cast<std::int64_t>(i);
        // y = lead * monic
        lead[key] = key == 0 ? f.coeff(y, 0) : f.coeff(y, 1);
    }
    slot_of_.assign(f.q(), 0);
    scalar_of_.assign(f.q(), 0);
    for (std::uint32_t x = 1; x < f.q(); ++x) {
        const auto key = monic_coset_key(f, {x});
        const Residue x_lead = key == 0 ? f.coeff({x}, 0) : f.coeff({x}, 1);
        slot_of_[x] = static_cast<std::uint32_t>(slot_for_key[key]);
        scalar_of_[x] = static_cast<Residue>(std::uint64_t{x_lead} * mod_inv(lead[key], p) % p);
    }
}

CosetRep FieldContext::coset_rep(Element x) const
{
    if (x.index == 0)
        throw DomainError("coset_rep: zero has no coset");
    const std::size_t slot = slot_of_[x.index];
    return {transversal_[slot], scalar_of_[x.index], slot};
}

FieldContext FieldContext::with_transversal(std::vector<Element> t) const
{
    FieldContext out = *this;
    out.transversal_ = std::move(t);
    out.index_transversal();
    return out;
}

} // namespace planar
