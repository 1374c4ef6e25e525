#pragma once

#include "planar/prime_field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace planar {

/// Dense matrix over F_p, row major.
class MatrixFp {
public:
    MatrixFp(std::size_t rows, std::size_t cols, Residue p);
    static MatrixFp identity(std::size_t n, Residue p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Residue p() const noexcept { return p_; }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    MatrixFp operator*(const MatrixFp& rhs) const;
    bool operator==(const MatrixFp& rhs) const = default;

    std::size_t rank() const;
    Residue determinant() const;
    std::optional<MatrixFp> inverse() const;
    /// Basis of {v : A v = 0}, each vector of length cols().
    std::vector<std::vector<Residue>> nullspace() const;

private:
    // Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> reduce();

    std::size_t rows_;
    std::size_t cols_;
    Residue p_;
    std::vector<Residue> data_;
};

} // namespace planar
