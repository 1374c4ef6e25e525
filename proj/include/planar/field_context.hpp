#pragma once

#include "planar/field.hpp"

#include <memory>
#include <vector>

namespace planar {

/// x = scalar * rep with rep in T and scalar in F_p^*.
struct CosetRep {
    Element rep;
    Residue scalar = 0;
    std::size_t slot = 0; ///< position of rep in T
};

/// F_{p^2} together with the distinguished elements used throughout:
/// beta with beta^{p-1} = -1, a primitive gamma, and a transversal T of
/// F_p^* in F_{p^2}^*.
///
/// The canonical context uses the modulus b^2 - s with s the smallest
/// nonsquare, beta = b, gamma the first primitive element in lexicographic
/// order and T = {1} u {c + beta : c = 0..p-1}. A different transversal can
/// be swapped in with with_transversal(); everything downstream only reads T
/// through this class.
class FieldContext {
public:
    const Field& field() const noexcept { return *field_; }
    Residue p() const noexcept { return field_->p(); }
    std::uint32_t q() const noexcept { return field_->q(); }

    Residue s() const noexcept { return s_; }
    Element beta() const noexcept { return beta_; }
    Element gamma() const noexcept { return gamma_; }
    const std::vector<Element>& transversal() const noexcept { return transversal_; }

    /// Throws DomainError for x == 0.
    CosetRep coset_rep(Element x) const;
    Residue trace(Element x) const noexcept { return field_->trace(x); }

    /// Same field and distinguished elements, another transversal. Throws
    /// ParameterError unless `t` hits every coset exactly once.
    FieldContext with_transversal(std::vector<Element> t) const;

private:
    friend FieldContext build_context(Residue p);
    FieldContext() = default;
    void index_transversal();

    std::shared_ptr<const Field> field_;
    Residue s_ = 0;
    Element beta_{};
    Element gamma_{};
    std::vector<Element> transversal_;
    // per element: slot of its coset in T and the scalar
    std::vector<std::uint32_t> slot_of_;
    std::vector<Residue> scalar_of_;
};

/// Throws ParameterError unless p is an odd prime.
FieldContext build_context(Residue p);

/// Canonical coset key of a nonzero x: the monic representative (1 or c + b).
std::uint32_t monic_coset_key(const Field& field, Element x);

} // namespace planar
