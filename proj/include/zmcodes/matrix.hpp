#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices of canonical residues over a single Z_m.
 *
 * Degenerate shapes (0 x l, s x 0) are legal values; they show up as empty
 * generator sets and empty kernels.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace zmcodes {

class Matrix {
public:
    Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix from_rows(const RingSpec& ring, const std::vector<std::vector<Int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(ring, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.a_[i * c + j] = ring.reduce(rows[i][j]);
        }
        return m;
    }

    static Matrix identity(const RingSpec& ring, std::size_t n) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
        return m;
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, Int v) { a_[i * cols_ + j] = ring_.reduce(v); }

    std::span<const Int> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

    std::vector<Int> row_vector(std::size_t i) const {
        return std::vector<Int>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Matrix transpose() const {
        Matrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.a_[j * rows_ + i] = a_[i * cols_ + j];
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        require_same_ring(ring_, rhs.ring_, "Matrix::operator*");
        if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: dimension mismatch");
        Matrix out(ring_, rows_, rhs.cols_);
        const Int m = ring_.modulus();
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int v = a_[i * cols_ + k];
                if (v == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    Int& cell = out.a_[i * rhs.cols_ + j];
                    cell = ring_.add(cell, mul_mod(v, rhs.a_[k * rhs.cols_ + j], m));
                }
            }
        }
        return out;
    }

    /// Rows i in [r0, r1), all columns.
    Matrix row_slice(std::size_t r0, std::size_t r1) const {
        Matrix out(ring_, r1 - r0, cols_);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.a_[(i - r0) * cols_ + j] = a_[i * cols_ + j];
        return out;
    }

    /// The submatrix picking the given rows and columns (indices ascending or not).
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
        Matrix out(ring_, row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out.a_[i * col_idx.size() + j] = a_[row_idx[i] * cols_ + col_idx[j]];
        return out;
    }

    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        require_same_ring(top.ring_, bottom.ring_, "Matrix::vstack");
        if (top.cols_ != bottom.cols_) throw std::invalid_argument("Matrix::vstack: column mismatch");
        Matrix out(top.ring_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.a_.begin(), top.a_.end(), out.a_.begin());
        std::copy(bottom.a_.begin(), bottom.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
        return out;
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.ring_ == rhs.ring_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.a_ == rhs.a_;
    }

private:
    RingSpec ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> a_;
};

/// Entry-wise reduction modulo <gamma>: the matrix over the residue field.
inline Matrix reduce_matrix_mod_gamma(const Matrix& m) {
    const RingSpec field = m.ring().residue_field();
    Matrix out(field, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m(i, j) % field.modulus());
    return out;
}

}  // namespace zmcodes
