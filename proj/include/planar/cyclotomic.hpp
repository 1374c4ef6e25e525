#pragma once

#include "planar/prime_field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planar {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[w], w = exp(2 pi i / p), as sum_{k<p} c_k w^k.
///
/// Kept canonical with c_{p-1} = 0 (subtract c_{p-1} from every coefficient,
/// using 1 + w + ... + w^{p-1} = 0), so equality is coefficientwise.
class CyclotomicInt {
public:
    explicit CyclotomicInt(Residue p);
    /// Any length-p coefficient vector; canonicalized.
    CyclotomicInt(Residue p, std::vector<BigInt> coeffs);

    static CyclotomicInt integer(Residue p, const BigInt& n);
    /// w^l, l taken mod p.
    static CyclotomicInt root_power(Residue p, std::int64_t l);
    /// sum_k counts[k] w^k.
    static CyclotomicInt from_exponent_counts(Residue p, std::span<const std::int64_t> counts);

    Residue p() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    /// Complex conjugation w -> w^{-1}.
    CyclotomicInt conjugate() const;

    CyclotomicInt& operator+=(const CyclotomicInt& rhs);
    CyclotomicInt& operator-=(const CyclotomicInt& rhs);
    CyclotomicInt operator-() const;
    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator*(const BigInt& k, CyclotomicInt a);
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) = default;

    std::string to_string() const;

private:
    void canonicalize();
    void check_same_ring(const CyclotomicInt& rhs) const;

    Residue p_;
    std::vector<BigInt> coeffs_;
};

} // namespace planar
