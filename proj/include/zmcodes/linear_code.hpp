#pragma once

/**
 * @file linear_code.hpp
 * @brief Linear codes over Z_m as canonical values.
 *
 * A LinearCode is a submodule of R^n held as its Howell-form generator
 * matrix, so equality of codes is equality of representations. Cardinality
 * comes from the pivots (the row with pivot p contributes m/p elements) and
 * is kept as an exact big integer; codes like 25^11 report exactly.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "howell.hpp"
#include "linalg.hpp"

namespace zmcodes {

class LinearCode {
public:
    static LinearCode from_matrix(const Matrix& gens) {
        if (gens.cols() < 1) throw std::invalid_argument("LinearCode: length must be at least 1");
        return LinearCode(gens.ring(), gens.cols(), howell_form(gens));
    }

    static LinearCode from_generators(const RingSpec& ring, std::size_t n,
                                      const std::vector<std::vector<Int>>& rows) {
        if (n < 1) throw std::invalid_argument("LinearCode: length must be at least 1");
        for (const auto& r : rows)
            if (r.size() != n) throw std::invalid_argument("LinearCode: generator length mismatch");
        Matrix m = rows.empty() ? Matrix(ring, 0, n) : Matrix::from_rows(ring, rows);
        return LinearCode(ring, n, howell_form(m));
    }

    static LinearCode zero_code(const RingSpec& ring, std::size_t n) {
        return from_generators(ring, n, {});
    }

    static LinearCode full_space(const RingSpec& ring, std::size_t n) {
        return from_matrix(Matrix::identity(ring, n));
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return length_; }
    const HowellForm& generators() const noexcept { return gens_; }
    const Matrix& generator_matrix() const noexcept { return gens_.matrix(); }
    const BigInt& cardinality() const noexcept { return cardinality_; }
    bool is_zero() const noexcept { return gens_.rows() == 0; }

    /// Rank when the code is free (all pivots are units); empty otherwise.
    std::optional<std::size_t> free_rank() const {
        for (std::size_t i = 0; i < gens_.rows(); ++i)
            if (gens_.pivot(i) != 1) return std::nullopt;
        return gens_.rows();
    }

    bool member(std::span<const Int> word) const {
        if (word.size() != length_) throw std::invalid_argument("LinearCode::member: length mismatch");
        return gens_.member(word);
    }

    friend bool operator==(const LinearCode& lhs, const LinearCode& rhs) {
        return lhs.ring_ == rhs.ring_ && lhs.length_ == rhs.length_ && lhs.gens_ == rhs.gens_;
    }

private:
    LinearCode(RingSpec ring, std::size_t n, HowellForm gens)
        : ring_(std::move(ring)), length_(n), gens_(std::move(gens)), cardinality_(1) {
        for (std::size_t i = 0; i < gens_.rows(); ++i) cardinality_ *= ring_.modulus() / gens_.pivot(i);
    }

    RingSpec ring_;
    std::size_t length_;
    HowellForm gens_;
    BigInt cardinality_;
};

/// The Euclidean dual {y : <x,y> = 0 for all x in C}.
inline LinearCode dual(const LinearCode& c) {
    return LinearCode::from_matrix(right_kernel(c.generator_matrix()));
}

inline void require_compatible(const LinearCode& c, const LinearCode& d, const char* what) {
    require_same_ring(c.ring(), d.ring(), what);
    if (c.length() != d.length()) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

inline LinearCode sum(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d, "sum");
    return LinearCode::from_matrix(Matrix::vstack(c.generator_matrix(), d.generator_matrix()));
}

/// C ∩ D, computed as (C^perp + D^perp)^perp; double duality over Z_m makes this exact.
inline LinearCode intersect(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d, "intersect");
    return dual(sum(dual(c), dual(d)));
}

inline bool equals(const LinearCode& c, const LinearCode& d) { return c == d; }

/// Whether C contains D.
inline bool contains_code(const LinearCode& c, const LinearCode& d) {
    require_compatible(c, d, "contains_code");
    for (std::size_t i = 0; i < d.generators().rows(); ++i)
        if (!c.member(d.generator_matrix().row(i))) return false;
    return true;
}

inline LinearCode hull(const LinearCode& c) { return intersect(c, dual(c)); }

inline bool is_lcd(const LinearCode& c) { return hull(c).is_zero(); }

/**
 * The free-code LCD test: for a full-row-rank generator matrix G, the code
 * is LCD iff det(G*G^t) is a unit. Non-FRR inputs are rejected.
 */
inline bool is_lcd_free_test(const Matrix& g) {
    if (!is_frr(g)) throw std::invalid_argument("is_lcd_free_test: generator matrix is not full row rank");
    return is_unit(det(g * g.transpose()));
}

/// {r*x : x in C}; unit r is an automorphism, so the code is unchanged.
inline LinearCode scale_code(const RingElem& r, const LinearCode& c) {
    require_same_ring(r.ring(), c.ring(), "scale_code");
    const Matrix& g = c.generator_matrix();
    Matrix scaled(c.ring(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) scaled.set(i, j, c.ring().mul(r.value(), g(i, j)));
    return LinearCode::from_matrix(scaled);
}

/**
 * The cyclic code of length n generated by a monic divisor f of x^n - 1
 * (coefficients ascending, f[t] = 1). Free of rank n - deg f.
 */
inline LinearCode cyclic_code(const RingSpec& ring, std::size_t n, std::vector<Int> f) {
    for (Int& c : f) c = ring.reduce(c);
    if (f.empty() || f.back() != 1)
        throw std::invalid_argument("cyclic_code: generator polynomial must be monic");
    const std::size_t t = f.size() - 1;
    if (t >= n) throw std::invalid_argument("cyclic_code: degree must be below the length");

    // long division of x^n - 1 by f; the remainder must vanish
    std::vector<Int> rem(n + 1, 0);
    rem[0] = ring.reduce(-1);
    rem[n] = 1;
    for (std::size_t i = n - t + 1; i-- > 0;) {
        const Int c = rem[i + t];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= t; ++j) rem[i + j] = ring.sub(rem[i + j], ring.mul(c, f[j]));
    }
    for (std::size_t j = 0; j < t; ++j)
        if (rem[j] != 0) throw std::invalid_argument("cyclic_code: polynomial does not divide x^n - 1");

    std::vector<std::vector<Int>> rows(n - t, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n - t; ++i)
        for (std::size_t j = 0; j <= t; ++j) rows[i][i + j] = f[j];
    return LinearCode::from_generators(ring, n, rows);
}

// ---------------------------------------------------------------------------
// Minimum distance
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 24;
inline constexpr int kDefaultWeightCap = 3;

/// Exact distance when lower == upper, otherwise the interval a capped search proved.
struct DistanceResult {
    Int lower;
    Int upper;
    bool exact() const noexcept { return lower == upper; }

    friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

namespace detail {

inline std::optional<Int> distance_by_enumeration(const LinearCode& c) {
    const HowellForm& h = c.generators();
    const RingSpec& ring = c.ring();
    const std::size_t k = h.rows();
    const std::size_t n = c.length();
    const Int m = ring.modulus();

    std::vector<Int> ranges(k);
    std::vector<std::vector<Int>> wrap(k);  // (range_i * h_i) mod m, to undo a full cycle
    for (std::size_t i = 0; i < k; ++i) {
        ranges[i] = m / h.pivot(i);
        wrap[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) wrap[i][j] = ring.mul(ranges[i] % m, h.matrix()(i, j));
    }

    std::vector<Int> digits(k, 0), word(n, 0);
    Int best = -1;
    while (true) {
        Int w = 0;
        for (Int x : word)
            if (x != 0) ++w;
        if (w > 0 && (best < 0 || w < best)) best = w;

        std::size_t i = 0;
        for (; i < k; ++i) {
            ++digits[i];
            for (std::size_t j = 0; j < n; ++j) word[j] = ring.add(word[j], h.matrix()(i, j));
            if (digits[i] < ranges[i]) break;
            digits[i] = 0;
            for (std::size_t j = 0; j < n; ++j) word[j] = ring.sub(word[j], wrap[i][j]);
        }
        if (i == k) break;
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline std::optional<Int> distance_by_weight_search(const LinearCode& c, int weight_cap) {
    const std::size_t n = c.length();
    const Int m = c.ring().modulus();
    const int wmax = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(weight_cap)));

    std::vector<Int> word(n, 0);
    for (int w = 1; w <= wmax; ++w) {
        std::vector<std::size_t> supp(static_cast<std::size_t>(w));
        std::iota(supp.begin(), supp.end(), std::size_t{0});
        while (true) {
            std::vector<Int> vals(static_cast<std::size_t>(w), 1);
            while (true) {
                std::fill(word.begin(), word.end(), 0);
                for (int j = 0; j < w; ++j) word[supp[static_cast<std::size_t>(j)]] = vals[static_cast<std::size_t>(j)];
                if (c.member(word)) return w;
                int j = 0;
                for (; j < w; ++j) {
                    if (++vals[static_cast<std::size_t>(j)] < m) break;
                    vals[static_cast<std::size_t>(j)] = 1;
                }
                if (j == w) break;
            }
            // next combination
            std::size_t i = static_cast<std::size_t>(w);
            while (i > 0 && supp[i - 1] == n - static_cast<std::size_t>(w) + (i - 1)) --i;
            if (i == 0) break;
            ++supp[i - 1];
            for (std::size_t j = i; j < static_cast<std::size_t>(w); ++j) supp[j] = supp[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Minimum Hamming weight of a nonzero codeword. Small codes are enumerated
 * exactly; larger ones get a weight-bounded membership search that either
 * pins the distance exactly or returns the interval [weight_cap+1, n].
 * The zero code has no distance.
 */
inline std::optional<DistanceResult> min_distance(const LinearCode& c,
                                                  std::uint64_t enum_cap = kDefaultEnumCap,
                                                  int weight_cap = kDefaultWeightCap) {
    if (enum_cap < 1 || weight_cap < 1) throw std::invalid_argument("min_distance: caps must be positive");
    if (c.is_zero()) return std::nullopt;
    if (c.cardinality() <= enum_cap) {
        const auto d = detail::distance_by_enumeration(c);
        return DistanceResult{*d, *d};
    }
    if (const auto d = detail::distance_by_weight_search(c, weight_cap))
        return DistanceResult{*d, *d};
    return DistanceResult{weight_cap + 1, static_cast<Int>(c.length())};
}

/// Bundled parameters: length, exact cardinality, free rank if any, distance.
struct CodeParams {
    std::size_t length;
    BigInt cardinality;
    std::optional<std::size_t> free_rank;
    std::optional<DistanceResult> distance;
};

inline CodeParams params(const LinearCode& c, std::uint64_t enum_cap = kDefaultEnumCap,
                         int weight_cap = kDefaultWeightCap) {
    return {c.length(), c.cardinality(), c.free_rank(), min_distance(c, enum_cap, weight_cap)};
}

}  // namespace zmcodes
