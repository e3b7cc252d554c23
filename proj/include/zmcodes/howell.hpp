#pragma once

/**
 * @file howell.hpp
 * @brief Howell canonical form, kernels and linear solving over Z_m.
 *
 * Everything here reduces to one exact computation: the Hermite normal form
 * (over Z, with arbitrary-precision entries) of the lattice spanned by the
 * input rows together with m*I. That lattice is the full preimage of the
 * row span in Z_m, so its HNF is canonical for the span; mapping it back to
 * canonical residues and dropping the rows that collapse to zero yields the
 * Howell form. The same stacked HNF, run on [[M, I],[m*I, 0]], additionally
 * produces row-operation witnesses (for solving x*M = b) and the left
 * kernel {x : x*M = 0} in Howell form.
 *
 * Properties this buys outright:
 *   - two generator sets with equal spans produce identical Howell forms;
 *   - pivots are the minimal positive generators of their column ideals
 *     (divisors of m), and entries above a pivot are reduced modulo it;
 *   - the span-closure (Howell) property needed for greedy membership.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matrix.hpp"

namespace zmcodes {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Floor division for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a - q * b < 0) --q;
    return q;
}

inline void bezout(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    g = old_r; x = old_x; y = old_y;
}

struct IntegerHnf {
    std::vector<std::vector<BigInt>> rows;  // echelon, positive pivots, reduced above
    std::vector<std::size_t> pivot_cols;    // ascending, one per row
};

/// Hermite normal form of the row lattice; unimodular row operations only.
inline IntegerHnf integer_hnf(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col] != 0) { sel = i; break; }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            BigInt g, p, q;
            bezout(rows[rank][col], rows[i][col], g, p, q);
            const BigInt a = rows[rank][col] / g;
            const BigInt b = rows[i][col] / g;
            // [[p, q], [-b, a]] has determinant 1
            for (std::size_t j = col; j < cols; ++j) {
                const BigInt hi = rows[rank][j];
                const BigInt lo = rows[i][j];
                rows[rank][j] = p * hi + q * lo;
                rows[i][j] = a * lo - b * hi;
            }
        }
        if (rows[rank][col] < 0) {
            for (std::size_t j = col; j < cols; ++j) rows[rank][j] = -rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const BigInt t = floor_div(rows[j][pivots[i]], rows[i][pivots[i]]);
            if (t == 0) continue;
            for (std::size_t k = pivots[i]; k < cols; ++k) rows[j][k] -= t * rows[i][k];
        }
    }
    return {std::move(rows), std::move(pivots)};
}

}  // namespace detail

/**
 * Canonical Howell form of a row span over Z_m: zero rows removed, one pivot
 * column per row, pivots dividing m.
 */
class HowellForm {
public:
    HowellForm(Matrix mat, std::vector<std::size_t> pivot_cols)
        : mat_(std::move(mat)), pivot_cols_(std::move(pivot_cols)) {}

    const Matrix& matrix() const noexcept { return mat_; }
    const std::vector<std::size_t>& pivot_cols() const noexcept { return pivot_cols_; }
    std::size_t rows() const noexcept { return mat_.rows(); }
    std::size_t cols() const noexcept { return mat_.cols(); }
    Int pivot(std::size_t i) const { return mat_(i, pivot_cols_[i]); }

    /**
     * Greedy reduction of v against the form; returns the residual. The
     * Howell property makes this complete: v is in the span iff the
     * residual is zero.
     */
    std::vector<Int> reduce(std::span<const Int> v) const {
        std::vector<Int> r(v.begin(), v.end());
        const RingSpec& ring = mat_.ring();
        for (std::size_t i = 0; i < rows(); ++i) {
            const std::size_t c = pivot_cols_[i];
            const Int p = mat_(i, c);
            if (r[c] % p != 0) continue;  // pivot cannot clear this entry; leave for the verdict
            const Int t = r[c] / p;
            if (t == 0) continue;
            for (std::size_t j = c; j < r.size(); ++j)
                r[j] = ring.sub(r[j], ring.mul(t, mat_(i, j)));
        }
        return r;
    }

    bool member(std::span<const Int> v) const {
        if (v.size() != cols()) throw std::invalid_argument("HowellForm::member: length mismatch");
        const std::vector<Int> r = reduce(v);
        for (Int x : r)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const HowellForm& lhs, const HowellForm& rhs) {
        return lhs.mat_ == rhs.mat_ && lhs.pivot_cols_ == rhs.pivot_cols_;
    }

private:
    Matrix mat_;
    std::vector<std::size_t> pivot_cols_;
};

namespace detail {

/// HNF of [rows of M; m*I_n], which always has one pivot per column.
inline IntegerHnf saturated_hnf(const Matrix& m) {
    const std::size_t n = m.cols();
    const BigInt mod = m.ring().modulus();
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m.rows() + n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<BigInt> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = m(i, j);
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> r(n);
        r[j] = mod;
        rows.push_back(std::move(r));
    }
    return integer_hnf(std::move(rows), n);
}

inline HowellForm howell_from_hnf(const IntegerHnf& hnf, const RingSpec& ring, std::size_t cols) {
    const BigInt mod = ring.modulus();
    std::vector<std::vector<Int>> keep;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < hnf.rows.size(); ++i) {
        if (hnf.rows[i][hnf.pivot_cols[i]] == mod) continue;  // the row is exactly m*e_c
        std::vector<Int> r(cols);
        for (std::size_t j = 0; j < cols; ++j) r[j] = static_cast<Int>(hnf.rows[i][j] % mod);
        keep.push_back(std::move(r));
        pivots.push_back(hnf.pivot_cols[i]);
    }
    Matrix mat = keep.empty() ? Matrix(ring, 0, cols) : Matrix::from_rows(ring, keep);
    return HowellForm(std::move(mat), std::move(pivots));
}

}  // namespace detail

/// Howell canonical form of the row span of M over its ring.
inline HowellForm howell_form(const Matrix& m) {
    return detail::howell_from_hnf(detail::saturated_hnf(m), m.ring(), m.cols());
}

/**
 * The stacked HNF of [[M, I],[m*I, 0]] in one pass: the Howell form of M,
 * per-row solution witnesses (transform.row(i) * M = howell.row(i)), and
 * the left kernel {x : x*M = 0} of M, itself in Howell form.
 */
struct LinearSystem {
    HowellForm howell;
    Matrix transform;
    HowellForm kernel;
};

inline LinearSystem linear_system(const Matrix& m) {
    const std::size_t s = m.rows();
    const std::size_t n = m.cols();
    const RingSpec& ring = m.ring();
    const BigInt mod = ring.modulus();

    std::vector<std::vector<BigInt>> rows;
    rows.reserve(s + n);
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<BigInt> r(n + s);
        for (std::size_t j = 0; j < n; ++j) r[j] = m(i, j);
        r[n + i] = 1;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> r(n + s);
        r[j] = mod;
        rows.push_back(std::move(r));
    }
    const detail::IntegerHnf hnf = detail::integer_hnf(std::move(rows), n + s);

    std::vector<std::vector<Int>> hrows, trows, krows;
    std::vector<std::size_t> hpivots, kpivots;
    for (std::size_t i = 0; i < hnf.rows.size(); ++i) {
        const std::size_t pc = hnf.pivot_cols[i];
        if (pc < n) {
            if (hnf.rows[i][pc] == mod) continue;
            std::vector<Int> h(n), t(s);
            for (std::size_t j = 0; j < n; ++j) h[j] = static_cast<Int>(hnf.rows[i][j] % mod);
            for (std::size_t j = 0; j < s; ++j) t[j] = static_cast<Int>(hnf.rows[i][n + j] % mod);
            hrows.push_back(std::move(h));
            trows.push_back(std::move(t));
            hpivots.push_back(pc);
        } else {
            if (hnf.rows[i][pc] == mod) continue;
            std::vector<Int> k(s);
            for (std::size_t j = 0; j < s; ++j) k[j] = static_cast<Int>(hnf.rows[i][n + j] % mod);
            krows.push_back(std::move(k));
            kpivots.push_back(pc - n);
        }
    }
    Matrix hmat = hrows.empty() ? Matrix(ring, 0, n) : Matrix::from_rows(ring, hrows);
    Matrix tmat = trows.empty() ? Matrix(ring, 0, s) : Matrix::from_rows(ring, trows);
    Matrix kmat = krows.empty() ? Matrix(ring, 0, s) : Matrix::from_rows(ring, krows);
    return {HowellForm(std::move(hmat), std::move(hpivots)), std::move(tmat),
            HowellForm(std::move(kmat), std::move(kpivots))};
}

/// Solves x * M = b against a precomputed system; empty when unsolvable.
inline std::optional<std::vector<Int>> solve_left(const LinearSystem& sys, std::span<const Int> b) {
    const HowellForm& h = sys.howell;
    if (b.size() != h.cols()) throw std::invalid_argument("solve_left: dimension mismatch");
    const RingSpec& ring = h.matrix().ring();
    std::vector<Int> r(b.begin(), b.end());
    for (Int& x : r) x = ring.reduce(x);
    std::vector<Int> x(sys.transform.cols(), 0);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const std::size_t c = h.pivot_cols()[i];
        const Int p = h.pivot(i);
        if (r[c] % p != 0) return std::nullopt;
        const Int t = r[c] / p;
        if (t == 0) continue;
        for (std::size_t j = c; j < r.size(); ++j) r[j] = ring.sub(r[j], ring.mul(t, h.matrix()(i, j)));
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = ring.add(x[j], ring.mul(t, sys.transform(i, j)));
    }
    for (Int v : r)
        if (v != 0) return std::nullopt;
    return x;
}

inline std::optional<std::vector<Int>> solve_left(const Matrix& m, std::span<const Int> b) {
    return solve_left(linear_system(m), b);
}

/// Generators (Howell form) of {x : x * M = 0} over Z_m.
inline Matrix left_kernel(const Matrix& m) {
    return linear_system(m).kernel.matrix();
}

/// Generators of {y : M * y^t = 0}, the right kernel.
inline Matrix right_kernel(const Matrix& m) {
    return left_kernel(m.transpose());
}

}  // namespace zmcodes
