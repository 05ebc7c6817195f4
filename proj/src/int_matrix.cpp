#include "hmg/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hmg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ghost_repeat(std::size_t q) const {
    IntMatrix out(rows_, cols_ * q);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < q; ++k)
            for (std::size_t c = 0; c < cols_; ++c)
                out.at(r, k * cols_ + c) = at(r, c);
    return out;
}

IntMatrix IntMatrix::lambda_lift(std::size_t p) const {
    if (p < 2) throw std::invalid_argument("lambda_lift requires p >= 2");
    const std::size_t out_rows = (p - 1) * rows_ + cols_;
    IntMatrix out(out_rows, p * cols_);
    for (std::size_t b = 0; b + 1 < p; ++b)
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out.at(b * rows_ + r, b * cols_ + c) = at(r, c);
    for (std::size_t b = 0; b < p; ++b)
        for (std::size_t c = 0; c < cols_; ++c)
            out.at((p - 1) * rows_ + c, b * cols_ + c) = 1;
    return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntMatrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(r, j) = at(r, cols[j]);
    return out;
}

IntMatrix IntMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
    return select_columns(perm);
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<Int> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (x[c] != 0 && at(r, c) != 0)
                acc = checked_add(acc, checked_mul(at(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

bool IntMatrix::in_kernel(const std::vector<Int>& x) const {
    auto y = apply(x);
    return std::all_of(y.begin(), y.end(), [](Int v) { return v == 0; });
}

namespace {

// Integer row echelon reduction (Euclidean pivoting) of `m`, applying the
// same row operations to `carry` when non-null. Returns the pivot column of
// each eliminated row, in order.
std::vector<std::size_t> echelonize(IntMatrix& m, IntMatrix* carry,
                                    std::vector<std::size_t>* pivot_rows_src = nullptr) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> row_origin(rows);
    for (std::size_t i = 0; i < rows; ++i) row_origin[i] = i;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(a, c), m.at(b, c));
        if (carry)
            for (std::size_t c = 0; c < carry->cols(); ++c)
                std::swap(carry->at(a, c), carry->at(b, c));
        std::swap(row_origin[a], row_origin[b]);
    };
    auto add_multiple = [&](std::size_t dst, std::size_t src, Int f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < cols; ++c)
            m.at(dst, c) = checked_add(m.at(dst, c), checked_mul(f, m.at(src, c)));
        if (carry)
            for (std::size_t c = 0; c < carry->cols(); ++c)
                carry->at(dst, c) = checked_add(carry->at(dst, c), checked_mul(f, carry->at(src, c)));
    };

    std::vector<std::size_t> pivot_cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        // Euclidean elimination within the column until one nonzero remains.
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = lead; r < rows; ++r) {
                if (m.at(r, col) == 0) continue;
                if (best == rows ||
                    std::llabs(m.at(r, col)) < std::llabs(m.at(best, col)))
                    best = r;
            }
            if (best == rows) break;  // column is zero below lead
            swap_rows(lead, best);
            bool more = false;
            for (std::size_t r = lead + 1; r < rows; ++r) {
                if (m.at(r, col) == 0) continue;
                Int f = -(m.at(r, col) / m.at(lead, col));
                add_multiple(r, lead, f);
                if (m.at(r, col) != 0) more = true;
            }
            if (!more) break;
        }
        if (m.at(lead, col) != 0) {
            pivot_cols.push_back(col);
            if (pivot_rows_src) pivot_rows_src->push_back(row_origin[lead]);
            ++lead;
        }
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
    IntMatrix m = a;
    return echelonize(m, nullptr).size();
}

std::vector<std::size_t> independent_rows(const IntMatrix& a) {
    // Row indices fall out of eliminating the transpose.
    IntMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            t.at(c, r) = a.at(r, c);
    IntMatrix m = t;
    auto pivots = echelonize(m, nullptr);
    return pivots;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    // Reduce A^T alongside an identity; rows of the identity part whose A^T
    // part vanished form a lattice basis of the kernel.
    IntMatrix t(n, a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            t.at(c, r) = a.at(r, c);
    IntMatrix u = IntMatrix::identity(n);
    echelonize(t, &u);

    std::vector<std::vector<Int>> basis;
    for (std::size_t r = 0; r < n; ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < t.cols(); ++c)
            if (t.at(r, c) != 0) { zero = false; break; }
        if (!zero) continue;
        std::vector<Int> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = u.at(r, c);
        if (std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; }))
            basis.push_back(std::move(v));
    }
    return basis;
}

Int bareiss_determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) { swap_row = r; break; }
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a.at(i, j), a.at(k, k)),
                                      checked_mul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = num / prev;  // divides exactly (Bareiss)
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return checked_mul(sign, a.at(n - 1, n - 1));
}

bool kernels_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("kernels_equal: column counts differ");
    for (const auto& v : integer_kernel_basis(a))
        if (!b.in_kernel(v)) return false;
    for (const auto& v : integer_kernel_basis(b))
        if (!a.in_kernel(v)) return false;
    return true;
}

}  // namespace hmg
