#include "planar/linalg.hpp"

#include "planar/errors.hpp"

#include <utility>

namespace planar {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, Residue p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{
}

MatrixFp MatrixFp::identity(std::size_t n, Residue p)
{
    MatrixFp m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const
{
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw ParameterError("matrix shape mismatch");
    MatrixFp out(rows_, rhs.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                acc = (acc + std::uint64_t{(*this)(i, k)} * rhs(k, j)) % p_;
            out(i, j) = static_cast<Residue>(acc);
        }
    return out;
}

std::vector<std::size_t> MatrixFp::reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && (*this)(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(row, c), (*this)(pivot, c));
        const std::uint64_t scale = mod_inv((*this)(row, col), p_);
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(row, c) = static_cast<Residue>((*this)(row, c) * scale % p_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col) == 0)
                continue;
            const std::uint64_t factor = (*this)(r, col);
            for (std::size_t c = 0; c < cols_; ++c)
                (*this)(r, c) = static_cast<Residue>(((*this)(r, c) + (p_ - factor) * (*this)(row, c)) % p_);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t MatrixFp::rank() const
{
    MatrixFp copy = *this;
    return copy.reduce().size();
}

Residue MatrixFp::determinant() const
{
    if (rows_ != cols_)
        throw ParameterError("determinant of a non-square matrix");
    MatrixFp m = *this;
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m(pivot, col) == 0)
            ++pivot;
        if (pivot == rows_)
            return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(m(col, c), m(pivot, c));
            det = (p_ - det) % p_;
        }
        det = det * m(col, col) % p_;
        const std::uint64_t inv = mod_inv(m(col, col), p_);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            const std::uint64_t factor = m(r, col) * inv % p_;
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < cols_; ++c)
                m(r, c) = static_cast<Residue>((m(r, c) + (p_ - factor) * m(col, c)) % p_);
        }
    }
    return static_cast<Residue>(det);
}

std::optional<MatrixFp> MatrixFp::inverse() const
{
    if (rows_ != cols_)
        throw ParameterError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    MatrixFp aug(n, 2 * n, p_);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    const auto pivots = aug.reduce();
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    MatrixFp out(n, n, p_);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = aug(r, n + c);
    return out;
}

std::vector<std::vector<Residue>> MatrixFp::nullspace() const
{
    MatrixFp m = *this;
    const auto pivots = m.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Residue>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Residue> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p_ - m(r, free)) % p_;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace planar
