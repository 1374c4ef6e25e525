#include "planar/cyclotomic.hpp"

#include "planar/errors.hpp"

namespace planar {

CyclotomicInt::CyclotomicInt(Residue p) : p_(p), coeffs_(p)
{
    if (p < 3 || !is_prime(p))
        throw ParameterError("cyclotomic ring needs an odd prime");
}

CyclotomicInt::CyclotomicInt(Residue p, std::vector<BigInt> coeffs) : CyclotomicInt(p)
{
    if (coeffs.size() != p)
        throw ParameterError("cyclotomic integer needs exactly p coefficients");
    coeffs_ = std::move(coeffs);
    canonicalize();
}

CyclotomicInt CyclotomicInt::integer(Residue p, const BigInt& n)
{
    CyclotomicInt out(p);
    out.coeffs_[0] = n;
    return out;
}

CyclotomicInt CyclotomicInt::root_power(Residue p, std::int64_t l)
{
    CyclotomicInt out(p);
    out.coeffs_[mod_reduce(l, p)] = 1;
    out.canonicalize();
    return out;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(Residue p, std::span<const std::int64_t> counts)
{
    if (counts.size() != p)
        throw ParameterError("need p exponent counts");
    std::vector<BigInt> c(counts.begin(), counts.end());
    return {p, std::move(c)};
}

void CyclotomicInt::canonicalize()
{
    const BigInt last = coeffs_[p_ - 1];
    if (last == 0)
        return;
    for (auto& c : coeffs_)
        c -= last;
}

void CyclotomicInt::check_same_ring(const CyclotomicInt& rhs) const
{
    if (rhs.p_ != p_)
        throw ParameterError("cyclotomic integers over different p");
}

bool CyclotomicInt::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CyclotomicInt CyclotomicInt::conjugate() const
{
    std::vector<BigInt> out(p_);
    for (Residue k = 0; k < p_; ++k)
        out[(p_ - k) % p_] = coeffs_[k];
    return {p_, std::move(out)};
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs)
{
    check_same_ring(rhs);
    for (Residue k = 0; k < p_; ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs)
{
    check_same_ring(rhs);
    for (Residue k = 0; k < p_; ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

CyclotomicInt CyclotomicInt::operator-() const
{
    CyclotomicInt out(*this);
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b)
{
    a.check_same_ring(b);
    const Residue p = a.p_;
    std::vector<BigInt> out(p);
    for (Residue i = 0; i < p; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (Residue j = 0; j < p; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            out[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return {p, std::move(out)};
}

CyclotomicInt operator*(const BigInt& k, CyclotomicInt a)
{
    for (auto& c : a.coeffs_)
        c *= k;
    return a;
}

std::string CyclotomicInt::to_string() const
{
    std::string out;
    for (Residue k = 0; k < p_; ++k) {
        if (coeffs_[k] == 0)
            continue;
        if (!out.empty())
            out += coeffs_[k] < 0 ? " - " : " + ";
        else if (coeffs_[k] < 0)
            out += '-';
        const BigInt mag = coeffs_[k] < 0 ? BigInt(-coeffs_[k]) : coeffs_[k];
        if (k == 0 || mag != 1)
            out += mag.str();
        if (k > 0)
            out += k == 1 ? "w" : "w^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace planar
