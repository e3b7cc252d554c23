#pragma once

/**
 * @file torsion.hpp
 * @brief Torsion codes of codes over chain rings Z_{p^e}: submodule quotients
 *        (C : gamma^i), their reductions T_i(C) over F_p, the Tor identities,
 *        and the four LCD matrix-product constructions they feed.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix_product.hpp"

namespace zmcodes {

namespace detail {

inline const ChainStructure& require_chain(const LinearCode& c, const char* what) {
    if (!c.ring().has_chain())
        throw std::invalid_argument(std::string(what) + ": code must live over a chain ring Z_{p^e}");
    return c.ring().chain();
}

inline void require_torsion_index(const ChainStructure& chain, int i, const char* what) {
    if (i < 0 || i >= chain.e)
        throw std::invalid_argument(std::string(what) + ": torsion index out of range [0, e-1]");
}

}  // namespace detail

/**
 * The submodule quotient (C : gamma^i) = {x : gamma^i * x in C}, computed by
 * a stacked kernel: (x | y) * [[gamma^i * I], [-G]] = 0 expresses
 * gamma^i * x = y*G, and the x-part of the solution space is the quotient.
 */
inline LinearCode quotient_by_gamma_power(const LinearCode& c, int i) {
    const ChainStructure& chain = detail::require_chain(c, "quotient_by_gamma_power");
    detail::require_torsion_index(chain, i, "quotient_by_gamma_power");
    const RingSpec& ring = c.ring();
    const std::size_t n = c.length();

    Int gamma_pow = 1 % ring.modulus();
    for (int t = 0; t < i; ++t) gamma_pow = ring.mul(gamma_pow, chain.gamma);

    Matrix top(ring, n, n);
    for (std::size_t j = 0; j < n; ++j) top.set(j, j, gamma_pow);
    const Matrix& g = c.generator_matrix();
    Matrix bottom(ring, g.rows(), n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) bottom.set(r, j, ring.neg(g(r, j)));

    const Matrix solutions = left_kernel(Matrix::vstack(top, bottom));
    std::vector<std::vector<Int>> xs;
    for (std::size_t r = 0; r < solutions.rows(); ++r) {
        std::vector<Int> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = solutions(r, j);
        xs.push_back(std::move(x));
    }
    return LinearCode::from_generators(ring, n, xs);
}

/// The reduction code {x-bar : x in C} over the residue field F_p.
inline LinearCode reduction_code(const LinearCode& c) {
    const ChainStructure& chain = detail::require_chain(c, "reduction_code");
    const RingSpec field = c.ring().residue_field();
    const Matrix& g = c.generator_matrix();
    std::vector<std::vector<Int>> rows(g.rows(), std::vector<Int>(c.length()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < c.length(); ++j) rows[r][j] = g(r, j) % chain.p;
    return LinearCode::from_generators(field, c.length(), rows);
}

/// The i-torsion code T_i(C), a linear code over F_p.
inline LinearCode torsion_code(const LinearCode& c, int i) {
    return reduction_code(quotient_by_gamma_power(c, i));
}

/// All torsion codes T_0(C) ⊆ T_1(C) ⊆ ... ⊆ T_{e-1}(C); the nesting is verified.
struct TorsionFamily {
    LinearCode source;
    std::vector<LinearCode> members;
};

inline TorsionFamily torsion_family(const LinearCode& c) {
    const ChainStructure& chain = detail::require_chain(c, "torsion_family");
    std::vector<LinearCode> members;
    members.reserve(static_cast<std::size_t>(chain.e));
    for (int i = 0; i < chain.e; ++i) members.push_back(torsion_code(c, i));
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        if (!contains_code(members[i + 1], members[i]))
            throw std::logic_error("torsion_family: nesting T_i ⊆ T_{i+1} violated");
    return {c, std::move(members)};
}

/// T_i(C^perp) = (T_{e-1-i}(C))^perp; always true, a false return flags a bug.
inline bool tor_dual_identity_check(const LinearCode& c, int i) {
    const ChainStructure& chain = detail::require_chain(c, "tor_dual_identity_check");
    detail::require_torsion_index(chain, i, "tor_dual_identity_check");
    return torsion_code(dual(c), i) == dual(torsion_code(c, chain.e - 1 - i));
}

/// H(T_i(C)) ⊆ T_{e-1}(H(C)).
inline bool tor_hull_inclusion_check(const LinearCode& c, int i) {
    const ChainStructure& chain = detail::require_chain(c, "tor_hull_inclusion_check");
    detail::require_torsion_index(chain, i, "tor_hull_inclusion_check");
    return contains_code(torsion_code(hull(c), chain.e - 1), hull(torsion_code(c, i)));
}

struct TorsionMpcResult {
    LinearCode code;  // the LCD matrix-product code over F_p
    std::optional<DistanceBounds> distances;
};

/**
 * The four LCD matrix-product constructions from torsion codes of an LCD
 * code C over Z_{p^e}, with A square non-singular over F_p:
 *   1: AA^t diagonal, any indices;
 *   2: AA^t antidiagonal, palindromic index list;
 *   3: all indices equal;
 *   4: A triangular with indices monotone along the nesting direction.
 * The LCD hypothesis on C is re-verified, and the resulting product is
 * checked to be LCD. Distance equalities/bounds are reported when A is NSC.
 */
inline TorsionMpcResult torsion_lcd_mpc(const LinearCode& c, const std::vector<int>& indices,
                                        const Matrix& a, int variant) {
    const ChainStructure& chain = detail::require_chain(c, "torsion_lcd_mpc");
    const RingSpec field = c.ring().residue_field();
    require_same_ring(a.ring(), field, "torsion_lcd_mpc: A must live over the residue field");
    if (!a.is_square() || !is_nonsingular(a))
        throw std::invalid_argument("torsion_lcd_mpc: A must be square and non-singular");
    if (indices.size() != a.rows())
        throw std::invalid_argument("torsion_lcd_mpc: one torsion index per row of A");
    for (int i : indices) detail::require_torsion_index(chain, i, "torsion_lcd_mpc");
    if (!is_lcd(c)) throw std::invalid_argument("torsion_lcd_mpc: C is not LCD");

    const std::size_t s = indices.size();
    switch (variant) {
        case 1:
            if (!aat_classify(a).diagonal())
                throw std::invalid_argument("torsion_lcd_mpc: variant 1 needs AA^t diagonal with unit entries");
            break;
        case 2: {
            if (!aat_classify(a).antidiagonal())
                throw std::invalid_argument(
                    "torsion_lcd_mpc: variant 2 needs AA^t antidiagonal with unit entries");
            for (std::size_t j = 0; j < s / 2; ++j)
                if (indices[j] != indices[s - 1 - j])
                    throw std::invalid_argument("torsion_lcd_mpc: variant 2 needs a palindromic index list");
            break;
        }
        case 3:
            for (int i : indices)
                if (i != indices.front())
                    throw std::invalid_argument("torsion_lcd_mpc: variant 3 needs all indices equal");
            break;
        case 4: {
            const bool upper = is_upper_triangular(a);
            const bool lower = is_lower_triangular(a);
            if (!upper && !lower)
                throw std::invalid_argument("torsion_lcd_mpc: variant 4 needs a triangular A");
            for (std::size_t j = 0; j + 1 < s; ++j) {
                const bool ok = upper ? indices[j] <= indices[j + 1] : indices[j] >= indices[j + 1];
                if (!ok)
                    throw std::invalid_argument(
                        "torsion_lcd_mpc: variant 4 needs indices monotone along the triangle");
            }
            break;
        }
        default:
            throw std::invalid_argument("torsion_lcd_mpc: variant must be 1..4");
    }

    std::vector<LinearCode> inputs;
    inputs.reserve(s);
    for (int i : indices) inputs.push_back(torsion_code(c, i));
    const MatrixProductSpec spec(inputs, a);
    LinearCode code = mpc_build(spec);
    if (!is_lcd(code)) throw std::logic_error("torsion_lcd_mpc: construction produced a non-LCD code");

    std::optional<DistanceBounds> distances;
    bool degenerate = false;
    for (const LinearCode& t : inputs)
        degenerate = degenerate || t.is_zero() || t.cardinality() == boost::multiprecision::pow(
                                                      BigInt(field.modulus()), static_cast<unsigned>(t.length()));
    if (!degenerate && is_nsc(a)) distances = mpc_distance_bounds(spec);
    return {std::move(code), distances};
}

}  // namespace zmcodes
