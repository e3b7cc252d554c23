#pragma once

/**
 * @file oracle.hpp
 * @brief Deliberately naive reference implementations of the semantic
 *        operations, by explicit enumeration. Every fast path in the library
 *        is expected to agree with these wherever they can run; a
 *        disagreement always indicts the fast path.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "linear_code.hpp"

namespace zmcodes::oracle {

using Word = std::vector<Int>;

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

namespace detail {

/// m^n with saturation at cap+1, to test enumerability without overflow.
inline std::uint64_t pow_saturating(Int m, std::size_t n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > cap / static_cast<std::uint64_t>(m)) return cap + 1;
        r *= static_cast<std::uint64_t>(m);
    }
    return r;
}

/// Lexicographic enumeration of all of R^n.
template <typename F>
void for_each_word(Int m, std::size_t n, F&& visit) {
    Word w(n, 0);
    while (true) {
        visit(const_cast<const Word&>(w));
        std::size_t i = n;
        while (i > 0) {
            if (++w[i - 1] < m) break;
            w[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
}

}  // namespace detail

/// The exact set of R-linear combinations of the generators, by closure.
inline std::set<Word> brute_span(const RingSpec& ring, std::size_t n, const std::vector<Word>& gens,
                                 std::uint64_t cap = kDefaultCap) {
    const Int m = ring.modulus();
    if (detail::pow_saturating(m, gens.size(), cap) > cap && detail::pow_saturating(m, n, cap) > cap)
        throw std::length_error("brute_span: enumeration cap exceeded");
    std::set<Word> span;
    span.insert(Word(n, 0));
    for (const Word& g : gens) {
        if (g.size() != n) throw std::invalid_argument("brute_span: generator length mismatch");
        std::set<Word> next;
        for (const Word& base : span) {
            Word w = base;
            for (Int c = 0; c < m; ++c) {  // w = base + c*g
                next.insert(w);
                for (std::size_t j = 0; j < n; ++j) w[j] = ring.add(w[j], g[j]);
            }
            if (next.size() > cap) throw std::length_error("brute_span: enumeration cap exceeded");
        }
        span.swap(next);
    }
    return span;
}

inline std::set<Word> brute_span(const LinearCode& c, std::uint64_t cap = kDefaultCap) {
    std::vector<Word> gens;
    for (std::size_t i = 0; i < c.generators().rows(); ++i) gens.push_back(c.generator_matrix().row_vector(i));
    return brute_span(c.ring(), c.length(), gens, cap);
}

/// {y in R^n : <x,y> = 0 for all x in C}, scanning the whole ambient space.
inline std::set<Word> brute_dual(const LinearCode& c, std::uint64_t cap = kDefaultCap) {
    const Int m = c.ring().modulus();
    const std::size_t n = c.length();
    if (detail::pow_saturating(m, n, cap) > cap) throw std::length_error("brute_dual: enumeration cap exceeded");
    const Matrix& g = c.generator_matrix();
    std::set<Word> out;
    detail::for_each_word(m, n, [&](const Word& y) {
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot = c.ring().add(dot, c.ring().mul(g(i, j), y[j]));
            if (dot != 0) return;
        }
        out.insert(y);
    });
    return out;
}

inline std::set<Word> brute_hull(const LinearCode& c, std::uint64_t cap = kDefaultCap) {
    const std::set<Word> span = brute_span(c, cap);
    const std::set<Word> dual = brute_dual(c, cap);
    std::set<Word> out;
    for (const Word& w : dual)
        if (span.count(w)) out.insert(w);
    return out;
}

inline std::optional<Int> brute_min_distance(const LinearCode& c, std::uint64_t cap = kDefaultCap) {
    std::optional<Int> best;
    for (const Word& w : brute_span(c, cap)) {
        Int wt = 0;
        for (Int x : w)
            if (x != 0) ++wt;
        if (wt > 0 && (!best || wt < *best)) best = wt;
    }
    return best;
}

/// {x in R^n : gamma^i * x in C} by scanning the ambient space.
inline std::set<Word> brute_quotient(const LinearCode& c, int i, std::uint64_t cap = kDefaultCap) {
    const ChainStructure& chain = c.ring().chain();
    if (i < 0 || i >= chain.e) throw std::invalid_argument("brute_quotient: index out of range");
    const Int m = c.ring().modulus();
    const std::size_t n = c.length();
    if (detail::pow_saturating(m, n, cap) > cap)
        throw std::length_error("brute_quotient: enumeration cap exceeded");
    Int gamma_pow = 1 % m;
    for (int t = 0; t < i; ++t) gamma_pow = c.ring().mul(gamma_pow, chain.gamma);
    const std::set<Word> span = brute_span(c, cap);
    std::set<Word> out;
    detail::for_each_word(m, n, [&](const Word& x) {
        Word scaled(n);
        for (std::size_t j = 0; j < n; ++j) scaled[j] = c.ring().mul(gamma_pow, x[j]);
        if (span.count(scaled)) out.insert(x);
    });
    return out;
}

/// Set-vs-code agreement: the oracle set matches the span of the fast-path code.
inline bool agrees(const std::set<Word>& oracle_set, const LinearCode& fast) {
    if (BigInt(oracle_set.size()) != fast.cardinality()) return false;
    for (const Word& w : oracle_set)
        if (!fast.member(w)) return false;
    return true;
}

}  // namespace zmcodes::oracle
