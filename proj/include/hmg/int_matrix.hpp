#pragma once

#include <cstddef>
#include <vector>

#include "hmg/arith.hpp"

namespace hmg {

// Dense integer matrix. Everything this project builds is small (the column
// guards keep design matrices well under a few hundred columns), so a dense
// row-major layout behind exact arithmetic is all we need.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Int>& data() const { return data_; }

    bool operator==(const IntMatrix& other) const = default;

    // Horizontal concatenation of q copies: [A A ... A].
    IntMatrix ghost_repeat(std::size_t q) const;

    // Block matrix with p-1 diagonal copies of A over a row of p identity
    // blocks; (p-1)*rows + cols rows and p*cols columns.
    IntMatrix lambda_lift(std::size_t p) const;

    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
    IntMatrix permute_columns(const std::vector<std::size_t>& perm) const;

    // A * x with exact arithmetic.
    std::vector<Int> apply(const std::vector<Int>& x) const;
    bool in_kernel(const std::vector<Int>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Rank over the rationals, computed by exact integer elimination.
std::size_t rank(const IntMatrix& a);

// Indices of a maximal set of linearly independent rows.
std::vector<std::size_t> independent_rows(const IntMatrix& a);

// Lattice basis of { x integer : A x = 0 }, via row reduction of the
// transpose carried along an identity (Hermite-style elimination).
// Basis size is cols - rank.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int bareiss_determinant(IntMatrix a);

// True iff the integer kernels coincide; columns must already be aligned.
bool kernels_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace hmg
