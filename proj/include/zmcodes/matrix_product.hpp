#pragma once

/**
 * @file matrix_product.hpp
 * @brief Matrix-product codes [C_1 ... C_s]A and the hull/LCD machinery around them:
 *        the dual identity, the two hull cases, the seven LCD sufficient conditions,
 *        the partitioned-orthogonality hull bound, and the field-case distance bounds.
 *
 * Codewords of [C_1 ... C_s]A are the m x l matrices (c_1 ... c_s)A read
 * column-major as vectors of length m*l, so A = ((1,1),(0,1)) literally
 * reproduces Plotkin's (u | u+v).
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linear_code.hpp"

namespace zmcodes {

/// s input codes of a common length over one ring, plus the mixing matrix A.
struct MatrixProductSpec {
    std::vector<LinearCode> codes;
    Matrix a;

    MatrixProductSpec(std::vector<LinearCode> input_codes, Matrix mixing)
        : codes(std::move(input_codes)), a(std::move(mixing)) {
        if (codes.empty()) throw std::invalid_argument("MatrixProductSpec: needs at least one input code");
        if (codes.size() != a.rows())
            throw std::invalid_argument("MatrixProductSpec: row count of A must match the number of codes");
        if (a.rows() > a.cols()) throw std::invalid_argument("MatrixProductSpec: requires s <= l");
        for (const LinearCode& c : codes) {
            require_same_ring(c.ring(), a.ring(), "MatrixProductSpec");
            if (c.length() != codes.front().length())
                throw std::invalid_argument("MatrixProductSpec: input codes must share one length");
        }
    }

    std::size_t s() const noexcept { return codes.size(); }
    std::size_t l() const noexcept { return a.cols(); }
    std::size_t input_length() const noexcept { return codes.front().length(); }
    const RingSpec& ring() const noexcept { return a.ring(); }

    MatrixProductSpec with_codes(std::vector<LinearCode> replacement) const {
        return MatrixProductSpec(std::move(replacement), a);
    }
    MatrixProductSpec with_matrix(Matrix replacement) const {
        return MatrixProductSpec(codes, std::move(replacement));
    }

    std::vector<LinearCode> dual_codes() const {
        std::vector<LinearCode> out;
        out.reserve(codes.size());
        for (const LinearCode& c : codes) out.push_back(dual(c));
        return out;
    }
    std::vector<LinearCode> hull_codes() const {
        std::vector<LinearCode> out;
        out.reserve(codes.size());
        for (const LinearCode& c : codes) out.push_back(hull(c));
        return out;
    }
};

/// The matrix-product code as a code of length m*l (column-major flattening).
inline LinearCode mpc_build(const MatrixProductSpec& spec) {
    const std::size_t m = spec.input_length();
    const std::size_t l = spec.l();
    const RingSpec& ring = spec.ring();
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < spec.s(); ++i) {
        const Matrix& g = spec.codes[i].generator_matrix();
        for (std::size_t r = 0; r < g.rows(); ++r) {
            std::vector<Int> word(m * l, 0);
            for (std::size_t j = 0; j < l; ++j) {
                const Int aij = spec.a(i, j);
                if (aij == 0) continue;
                for (std::size_t t = 0; t < m; ++t) word[j * m + t] = ring.mul(aij, g(r, t));
            }
            rows.push_back(std::move(word));
        }
    }
    return LinearCode::from_generators(ring, m * l, rows);
}

/**
 * The dual via the identity ([C_1 ... C_s]A)^perp = [C_1^perp ... C_s^perp](A^{-1})^t,
 * for square non-singular A. The construction is cross-checked against the
 * directly computed dual; a mismatch would be an implementation bug.
 */
inline LinearCode mpc_dual(const MatrixProductSpec& spec) {
    if (!spec.a.is_square() || !is_nonsingular(spec.a))
        throw std::invalid_argument("mpc_dual: A must be square and non-singular");
    const Matrix a_inv_t = right_inverse(spec.a)->transpose();
    const LinearCode theorem_side = mpc_build(spec.with_codes(spec.dual_codes()).with_matrix(a_inv_t));
    if (!(theorem_side == dual(mpc_build(spec))))
        throw std::logic_error("mpc_dual: theorem construction disagrees with the direct dual");
    return theorem_side;
}

namespace detail {

inline bool duals_palindromic(const std::vector<LinearCode>& duals) {
    const std::size_t s = duals.size();
    for (std::size_t i = 0; i < s / 2; ++i)
        if (!(duals[i] == duals[s - 1 - i])) return false;
    return true;
}

inline bool nested_ascending(const std::vector<LinearCode>& codes) {
    for (std::size_t i = 0; i + 1 < codes.size(); ++i)
        if (!contains_code(codes[i + 1], codes[i])) return false;
    return true;
}

inline bool nested_descending(const std::vector<LinearCode>& codes) {
    for (std::size_t i = 0; i + 1 < codes.size(); ++i)
        if (!contains_code(codes[i], codes[i + 1])) return false;
    return true;
}

inline bool all_codes_equal(const std::vector<LinearCode>& codes) {
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (!(codes[i] == codes.front())) return false;
    return true;
}

inline bool is_diagonal(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

/// The dual-push equality ([C...]A)^perp = [C^perp...]A, cheap syntactic
/// routes (both halves of the diag/adiag lemma) before the direct check.
inline bool dual_push_holds(const MatrixProductSpec& spec) {
    if (spec.a.is_square()) {
        const AatClass cls = aat_classify(spec.a);
        if (cls.diagonal()) return true;
        if (cls.antidiagonal() && duals_palindromic(spec.dual_codes())) return true;
    }
    return dual(mpc_build(spec)) == mpc_build(spec.with_codes(spec.dual_codes()));
}

/// [C...]A = [C...] as codes, syntactic routes (the four-condition lemma) first.
inline bool mpc_identity_holds(const MatrixProductSpec& spec) {
    if (spec.s() != spec.l()) return false;  // lengths m*l vs m*s differ
    if (is_nonsingular(spec.a)) {
        if (is_diagonal(spec.a)) return true;
        if (all_codes_equal(spec.codes)) return true;
        if (is_upper_triangular(spec.a) && nested_ascending(spec.codes)) return true;
        if (is_lower_triangular(spec.a) && nested_descending(spec.codes)) return true;
    }
    return mpc_build(spec) == mpc_build(spec.with_matrix(Matrix::identity(spec.ring(), spec.s())));
}

}  // namespace detail

/**
 * If one of the four reduction conditions holds (nested inputs with a
 * triangular A, diagonal A, or all inputs equal), [C_1 ... C_s]A equals
 * [C_1 ... C_s]; returns that code, verified against the direct build.
 */
inline std::optional<LinearCode> mpc_identity_reduction(const MatrixProductSpec& spec) {
    if (!spec.a.is_square() || !is_nonsingular(spec.a))
        throw std::invalid_argument("mpc_identity_reduction: A must be square and non-singular");
    const bool applies = detail::is_diagonal(spec.a) || detail::all_codes_equal(spec.codes) ||
                         (is_upper_triangular(spec.a) && detail::nested_ascending(spec.codes)) ||
                         (is_lower_triangular(spec.a) && detail::nested_descending(spec.codes));
    if (!applies) return std::nullopt;
    const LinearCode plain = mpc_build(spec.with_matrix(Matrix::identity(spec.ring(), spec.s())));
    if (!(plain == mpc_build(spec)))
        throw std::logic_error("mpc_identity_reduction: reduction disagrees with the direct build");
    return plain;
}

/// How a hull was obtained: which theorem case fired, or the direct computation.
enum class HullProvenance { theorem_case1, theorem_case2, direct };

struct MpcHullResult {
    LinearCode hull;
    HullProvenance provenance;
};

/**
 * The hull of [C_1 ... C_s]A. When the dual-push equality holds and A is FRR
 * the hull is [H(C_1) ... H(C_s)]A (case 1); when [C...]A = [C...] it is
 * [H(C_1) ... H(C_s)] (case 2); otherwise it is computed directly.
 */
inline MpcHullResult mpc_hull(const MatrixProductSpec& spec) {
    if (detail::mpc_identity_holds(spec)) {
        const MatrixProductSpec plain = spec.with_matrix(Matrix::identity(spec.ring(), spec.s()));
        return {mpc_build(plain.with_codes(spec.hull_codes())), HullProvenance::theorem_case2};
    }
    if (detail::dual_push_holds(spec) && is_frr(spec.a))
        return {mpc_build(spec.with_codes(spec.hull_codes())), HullProvenance::theorem_case1};
    return {hull(mpc_build(spec)), HullProvenance::direct};
}

/**
 * Which of the seven LCD sufficient conditions hold, plus the partitioned-
 * orthogonality hypothesis and the licensed verdicts. Conditions 1-7 each
 * give "the product is LCD iff every input is"; the s1-orthogonal property
 * gives only the forward direction.
 */
struct ConditionReport {
    bool frr_dual_push = false;         // 1: dual-push equality and A FRR/right-invertible
    bool mpc_identity = false;          // 2: [C...]A = [C...]
    bool aat_diag = false;              // 3: A square, AA^t = diag(units)
    bool aat_adiag_palindrome = false;  // 4: AA^t = adiag(units), C_i^perp = C_{s-i+1}^perp
    bool upper_tri_nested = false;      // 5: non-singular upper triangular, C_1 ⊆ ... ⊆ C_s
    bool lower_tri_nested = false;      // 6: non-singular lower triangular, C_s ⊆ ... ⊆ C_1
    bool equal_codes_nonsingular = false;  // 7: non-singular, all inputs equal
    bool s1_orthogonal = false;
    std::optional<std::size_t> s1_split;

    bool all_inputs_lcd = false;
    std::optional<bool> mpc_lcd;  // present when some condition licenses a verdict

    bool any_iff_condition() const noexcept {
        return frr_dual_push || mpc_identity || aat_diag || aat_adiag_palindrome || upper_tri_nested ||
               lower_tri_nested || equal_codes_nonsingular;
    }
};

inline ConditionReport lcd_conditions(const MatrixProductSpec& spec) {
    ConditionReport rep;
    const bool square = spec.a.is_square();
    const bool nonsing = square && is_nonsingular(spec.a);
    const AatClass cls = aat_classify(spec.a);

    rep.aat_diag = square && cls.diagonal();
    if (square && cls.antidiagonal()) rep.aat_adiag_palindrome = detail::duals_palindromic(spec.dual_codes());
    rep.upper_tri_nested = nonsing && is_upper_triangular(spec.a) && detail::nested_ascending(spec.codes);
    rep.lower_tri_nested = nonsing && is_lower_triangular(spec.a) && detail::nested_descending(spec.codes);
    rep.equal_codes_nonsingular = nonsing && detail::all_codes_equal(spec.codes);
    rep.mpc_identity = detail::mpc_identity_holds(spec);
    rep.frr_dual_push = detail::dual_push_holds(spec) && is_frr(spec.a);

    if (nonsing) {
        for (std::size_t s1 = 1; s1 < spec.s(); ++s1) {
            bool shape = true;
            for (std::size_t i = 1; i < s1 && shape; ++i) shape = spec.codes[i] == spec.codes[0];
            for (std::size_t i = s1 + 1; i < spec.s() && shape; ++i) shape = spec.codes[i] == spec.codes[s1];
            if (shape && partition_blocks(spec.a, s1)) {
                rep.s1_orthogonal = true;
                rep.s1_split = s1;
                break;
            }
        }
    }

    rep.all_inputs_lcd = true;
    for (const LinearCode& c : spec.codes) rep.all_inputs_lcd = rep.all_inputs_lcd && is_lcd(c);

    if (rep.any_iff_condition())
        rep.mpc_lcd = rep.all_inputs_lcd;
    else if (rep.s1_orthogonal && rep.all_inputs_lcd)
        rep.mpc_lcd = true;
    return rep;
}

/**
 * Verifies the partitioned-orthogonality hull bound
 * H([C1..C1 C2..C2]A) ⊆ [H(C1)..H(C1) H(C2)..H(C2)](A^{-1})^t
 * for spec.codes made of s1 copies of c1 followed by copies of c2.
 * When c1 and c2 are LCD the product must itself be LCD; that corollary is
 * enforced, not just reported.
 */
inline bool orth_hull_bound(const MatrixProductSpec& spec, std::size_t s1, const LinearCode& c1,
                            const LinearCode& c2) {
    if (!spec.a.is_square() || !is_nonsingular(spec.a))
        throw std::invalid_argument("orth_hull_bound: A must be square and non-singular");
    if (!partition_blocks(spec.a, s1))
        throw std::invalid_argument("orth_hull_bound: A lacks the s1-partitioned orthogonal property");
    for (std::size_t i = 0; i < spec.s(); ++i) {
        const LinearCode& expected = i < s1 ? c1 : c2;
        if (!(spec.codes[i] == expected))
            throw std::invalid_argument("orth_hull_bound: codes must be s1 copies of C1 then copies of C2");
    }
    const LinearCode direct_hull = hull(mpc_build(spec));
    const Matrix a_inv_t = right_inverse(spec.a)->transpose();
    const LinearCode rhs = mpc_build(spec.with_codes(spec.hull_codes()).with_matrix(a_inv_t));
    const bool included = contains_code(rhs, direct_hull);
    if (is_lcd(c1) && is_lcd(c2) && !direct_hull.is_zero())
        throw std::logic_error("orth_hull_bound: LCD inputs must give an LCD product");
    return included;
}

/// Lower bounds on d and d of the dual for NSC A over a residue field; the
/// bounds are exact when the inputs form a descending chain.
struct DistanceBounds {
    Int code_bound;
    Int dual_bound;
    bool exact;
};

inline DistanceBounds mpc_distance_bounds(const MatrixProductSpec& spec,
                                          std::uint64_t enum_cap = kDefaultEnumCap,
                                          int weight_cap = kDefaultWeightCap) {
    if (!spec.ring().is_field())
        throw std::invalid_argument("mpc_distance_bounds: ring must be a residue field Z_p");
    if (!is_nsc(spec.a)) throw std::invalid_argument("mpc_distance_bounds: A must be non-singular by columns");

    const std::size_t s = spec.s();
    bool exact_inputs = true;
    std::optional<Int> code_bound, dual_bound;
    for (std::size_t i = 0; i < s; ++i) {
        if (const auto d = min_distance(spec.codes[i], enum_cap, weight_cap)) {
            exact_inputs = exact_inputs && d->exact();
            const Int term = static_cast<Int>(s - i) * d->lower;
            if (!code_bound || term < *code_bound) code_bound = term;
        }
        if (const auto dd = min_distance(dual(spec.codes[i]), enum_cap, weight_cap)) {
            exact_inputs = exact_inputs && dd->exact();
            const Int term = static_cast<Int>(i + 1) * dd->lower;
            if (!dual_bound || term < *dual_bound) dual_bound = term;
        }
    }
    if (!code_bound || !dual_bound)
        throw std::invalid_argument("mpc_distance_bounds: degenerate inputs have no distance on one side");
    const bool exact = exact_inputs && detail::nested_descending(spec.codes);
    return {*code_bound, *dual_bound, exact};
}

}  // namespace zmcodes
