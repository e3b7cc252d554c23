#pragma once

/**
 * @file linalg.hpp
 * @brief Determinants and the matrix predicates consumed by the code-theoretic results:
 *        non-singularity, full row rank, right inverses, non-singular by columns,
 *        diag/adiag classification of A*A^t, and partitioned-orthogonality blocks.
 */

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "howell.hpp"
#include "matrix.hpp"

namespace zmcodes {

namespace detail {

inline Int det_cofactor(const Matrix& m, std::vector<std::size_t>& rows, std::size_t col) {
    const RingSpec& ring = m.ring();
    if (rows.empty()) return 1 % ring.modulus();
    Int acc = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Int a = m(rows[k], col);
        if (a != 0) {
            const std::size_t saved = rows[k];
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
            const Int sub = det_cofactor(m, rows, col + 1);
            rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), saved);
            const Int term = ring.mul(a, sub);
            acc = (k % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
        }
    }
    return acc;
}

/// Fraction-free (Bareiss) determinant over Z, reduced mod m at the end.
inline Int det_bareiss(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { sel = i; break; }
            if (sel == n) return 0;  // zero column below the diagonal: singular over Q, det 0 over Z
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    const BigInt mod = m.ring().modulus();
    BigInt r = d % mod;
    if (r < 0) r += mod;
    return static_cast<Int>(r);
}

}  // namespace detail

/// Determinant of a square matrix: cofactor expansion up to 4x4, Bareiss beyond.
inline RingElem det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return RingElem(m.ring(), 1);
    if (n <= 4) {
        std::vector<std::size_t> rows(n);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        return RingElem(m.ring(), detail::det_cofactor(m, rows, 0));
    }
    return RingElem(m.ring(), detail::det_bareiss(m));
}

inline bool is_nonsingular(const Matrix& m) { return is_unit(det(m)); }

/// Full row rank: the rows are linearly independent, i.e. {x : x*M = 0} = {0}.
inline bool is_frr(const Matrix& m) {
    return left_kernel(m).rows() == 0;
}

/// A right inverse B with M*B = I, when one exists. Over finite Z_m this is
/// equivalent to full row rank.
inline std::optional<Matrix> right_inverse(const Matrix& m) {
    const std::size_t s = m.rows();
    const LinearSystem sys = linear_system(m.transpose());
    Matrix b(m.ring(), m.cols(), s);
    std::vector<Int> unit(s, 0);
    for (std::size_t j = 0; j < s; ++j) {
        unit.assign(s, 0);
        unit[j] = 1;
        const auto col = solve_left(sys, unit);  // col * M^t = e_j  <=>  M * col^t = e_j
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < m.cols(); ++i) b.set(i, j, (*col)[i]);
    }
    return b;
}

/**
 * Non-singular by columns: for every t in 1..s, every t x t submatrix of the
 * upper-t-row submatrix has unit determinant. Column subsets are enumerated,
 * so the width is capped.
 */
inline bool is_nsc(const Matrix& m) {
    if (m.rows() > m.cols()) throw std::invalid_argument("is_nsc: requires rows <= cols");
    if (m.cols() > 16) throw std::invalid_argument("is_nsc: width capped at 16 columns");
    const std::size_t s = m.rows();
    const std::size_t l = m.cols();
    std::vector<std::size_t> rows, cols;
    for (std::size_t t = 1; t <= s; ++t) {
        rows.resize(t);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        cols.assign(t, 0);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        while (true) {
            if (!is_nonsingular(m.submatrix(rows, cols))) return false;
            // next t-combination of {0..l-1}
            std::size_t i = t;
            while (i > 0 && cols[i - 1] == l - t + (i - 1)) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < t; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    return true;
}

/// Shape of A*A^t when it is diagonal or antidiagonal with unit entries.
struct AatClass {
    enum class Kind { diagonal_units, antidiagonal_units, other };
    Kind kind;
    std::vector<Int> units;  // r_1..r_s for the two structured kinds

    bool diagonal() const noexcept { return kind == Kind::diagonal_units; }
    bool antidiagonal() const noexcept { return kind == Kind::antidiagonal_units; }
};

inline AatClass aat_classify(const Matrix& m) {
    const Matrix p = m * m.transpose();
    const std::size_t s = p.rows();
    const RingSpec& ring = m.ring();

    bool diag = s > 0, adiag = s > 0;
    for (std::size_t i = 0; i < s && (diag || adiag); ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            const Int v = p(i, j);
            if (j == i && !ring.is_unit(v)) diag = false;
            if (j != i && v != 0) diag = false;
            if (j == s - 1 - i && !ring.is_unit(v)) adiag = false;
            if (j != s - 1 - i && v != 0) adiag = false;
        }
    }
    if (diag) {
        std::vector<Int> units(s);
        for (std::size_t i = 0; i < s; ++i) units[i] = p(i, i);
        return {AatClass::Kind::diagonal_units, std::move(units)};
    }
    if (adiag) {
        std::vector<Int> units(s);
        for (std::size_t i = 0; i < s; ++i) units[i] = p(i, s - 1 - i);
        return {AatClass::Kind::antidiagonal_units, std::move(units)};
    }
    return {AatClass::Kind::other, {}};
}

/**
 * Splits M into the upper s1 rows A1 and the rest A2, provided every row of
 * A1 is orthogonal to every row of A2 (A1 * A2^t = 0); empty otherwise.
 */
inline std::optional<std::pair<Matrix, Matrix>> partition_blocks(const Matrix& m, std::size_t s1) {
    if (s1 < 1 || s1 >= m.rows()) throw std::invalid_argument("partition_blocks: s1 out of range");
    Matrix a1 = m.row_slice(0, s1);
    Matrix a2 = m.row_slice(s1, m.rows());
    const Matrix prod = a1 * a2.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != 0) return std::nullopt;
    return std::make_pair(std::move(a1), std::move(a2));
}

inline bool is_upper_triangular(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < std::min(i, m.cols()); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

inline bool is_lower_triangular(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

}  // namespace zmcodes
