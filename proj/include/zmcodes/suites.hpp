#pragma once

/**
 * @file suites.hpp
 * @brief Named property suites over deterministic random corpora. Fixed
 *        seeds and fixed iteration orders make every report byte-identical
 *        across runs.
 */

#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "torsion.hpp"

namespace zmcodes::suites {

class SuiteRng {
public:
    explicit SuiteRng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t raw() { return eng_(); }
    Int below(Int k) { return static_cast<Int>(raw() % static_cast<std::uint64_t>(k)); }
    std::size_t index(std::size_t k) { return static_cast<std::size_t>(raw() % k); }

private:
    std::mt19937_64 eng_;  // the engine's output sequence is pinned by the standard
};

inline LinearCode random_code(SuiteRng& rng, const RingSpec& ring, std::size_t n) {
    const std::size_t k = rng.index(n + 1);
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(n));
    for (auto& row : rows)
        for (Int& v : row) v = rng.below(ring.modulus());
    return LinearCode::from_generators(ring, n, rows);
}

inline Matrix random_matrix(SuiteRng& rng, const RingSpec& ring, std::size_t r, std::size_t c) {
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.below(ring.modulus()));
    return m;
}

inline Matrix random_nonsingular(SuiteRng& rng, const RingSpec& ring, std::size_t s) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix m = random_matrix(rng, ring, s, s);
        if (is_nonsingular(m)) return m;
    }
    return Matrix::identity(ring, s);
}

/// Ordered pass/total bookkeeping; failures are also reported inline.
class Tally {
public:
    explicit Tally(std::ostream& out) : out_(out) {}

    void record(const std::string& property, bool ok, std::size_t instance) {
        if (!counts_.count(property)) {
            order_.push_back(property);
            counts_[property] = {0, 0};
        }
        auto& [pass, total] = counts_[property];
        ++total;
        if (ok) {
            ++pass;
        } else {
            ++failures_;
            out_ << "  FAIL " << property << " (instance " << instance << ")\n";
        }
    }

    void note(const std::string& line) { notes_.push_back(line); }

    std::size_t failures() const noexcept { return failures_; }

    std::size_t checks() const noexcept {
        std::size_t n = 0;
        for (const auto& [_, pt] : counts_) n += pt.second;
        return n;
    }

    void print_summary(const std::string& suite) const {
        for (const std::string& p : order_) {
            const auto& [pass, total] = counts_.at(p);
            out_ << "  " << p << ": " << pass << "/" << total << "\n";
        }
        for (const std::string& n : notes_) out_ << "  " << n << "\n";
        out_ << "suite " << suite << ": " << (failures_ == 0 ? "PASS" : "FAIL") << " (" << checks()
             << " checks, " << failures_ << " failures)\n";
    }

private:
    std::ostream& out_;
    std::vector<std::string> order_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts_;
    std::vector<std::string> notes_;
    std::size_t failures_ = 0;
};

namespace detail {

inline BigInt ambient_size(const RingSpec& ring, std::size_t n) {
    return boost::multiprecision::pow(BigInt(ring.modulus()), static_cast<unsigned>(n));
}

/// Streaming comparison of the fast dual against a full ambient-space scan.
inline bool oracle_dual_agrees(const LinearCode& c, const LinearCode& fast_dual) {
    const Int m = c.ring().modulus();
    const Matrix& g = c.generator_matrix();
    std::uint64_t count = 0;
    bool all_member = true;
    oracle::detail::for_each_word(m, c.length(), [&](const oracle::Word& y) {
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Int dot = 0;
            for (std::size_t j = 0; j < c.length(); ++j) dot = c.ring().add(dot, c.ring().mul(g(i, j), y[j]));
            if (dot != 0) return;
        }
        ++count;
        if (all_member && !fast_dual.member(y)) all_member = false;
    });
    return all_member && BigInt(count) == fast_dual.cardinality();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// linalg: Howell canonicity and the exact-linalg predicates
// ---------------------------------------------------------------------------

inline bool run_linalg_suite(std::ostream& out) {
    out << "suite linalg\n";
    Tally tally(out);
    SuiteRng rng(0x11A16);

    const std::vector<Int> canon_moduli = {6, 8, 12};
    for (std::size_t idx = 0; idx < 1000; ++idx) {
        const RingSpec ring(canon_moduli[idx % canon_moduli.size()]);
        const std::size_t n = 1 + idx % 4;
        const std::size_t k = rng.index(4);
        std::vector<std::vector<Int>> gens1(k, std::vector<Int>(n));
        for (auto& row : gens1)
            for (Int& v : row) v = rng.below(ring.modulus());

        std::vector<std::vector<Int>> gens2;
        if (idx % 2 == 0 && !gens1.empty()) {
            // same span: a shuffle plus one extra span element
            for (std::size_t i = gens1.size(); i-- > 0;) gens2.push_back(gens1[i]);
            std::vector<Int> combo(n, 0);
            for (const auto& g : gens1) {
                const Int c = rng.below(ring.modulus());
                for (std::size_t j = 0; j < n; ++j) combo[j] = ring.add(combo[j], ring.mul(c, g[j]));
            }
            gens2.push_back(combo);
        } else {
            const std::size_t k2 = rng.index(4);
            gens2.assign(k2, std::vector<Int>(n));
            for (auto& row : gens2)
                for (Int& v : row) v = rng.below(ring.modulus());
        }

        const auto h1 = howell_form(gens1.empty() ? Matrix(ring, 0, n) : Matrix::from_rows(ring, gens1));
        const auto h2 = howell_form(gens2.empty() ? Matrix(ring, 0, n) : Matrix::from_rows(ring, gens2));
        const auto s1 = oracle::brute_span(ring, n, gens1);
        const auto s2 = oracle::brute_span(ring, n, gens2);
        tally.record("howell canonicity (equal spans iff equal forms)", (s1 == s2) == (h1 == h2), idx);
        tally.record("howell idempotence", howell_form(h1.matrix()) == h1, idx);

        if (detail::ambient_size(ring, n) <= 5000) {
            const Matrix m = gens1.empty() ? Matrix(ring, 0, n) : Matrix::from_rows(ring, gens1);
            const Matrix ker = right_kernel(m);
            std::uint64_t count = 0;
            bool complete = true;
            const HowellForm kform = howell_form(ker);
            oracle::detail::for_each_word(ring.modulus(), n, [&](const oracle::Word& y) {
                bool solves = true;
                for (std::size_t i = 0; i < m.rows() && solves; ++i) {
                    Int dot = 0;
                    for (std::size_t j = 0; j < n; ++j) dot = ring.add(dot, ring.mul(m(i, j), y[j]));
                    solves = dot == 0;
                }
                if (!solves) return;
                ++count;
                if (complete && !kform.member(y)) complete = false;
            });
            BigInt kcard = 1;
            for (std::size_t i = 0; i < kform.rows(); ++i) kcard *= ring.modulus() / kform.pivot(i);
            tally.record("right kernel completeness", complete && BigInt(count) == kcard, idx);
        }
    }

    const RingSpec z30(30);
    for (std::size_t idx = 0; idx < 200; ++idx) {
        const std::size_t s = 1 + idx % 4;
        const Matrix a = random_matrix(rng, z30, s, s);
        const Matrix b = random_matrix(rng, z30, s, s);
        tally.record("det multiplicativity", det(a * b) == det(a) * det(b), idx);
    }

    const std::vector<Int> frr_moduli = {6, 8};
    for (std::size_t idx = 0; idx < 300; ++idx) {
        const RingSpec ring(frr_moduli[idx % frr_moduli.size()]);
        const std::size_t s = 1 + rng.index(4);
        const std::size_t l = s + rng.index(4 - s + 1);
        const Matrix m = random_matrix(rng, ring, s, l);
        const auto rinv = right_inverse(m);
        tally.record("FRR iff right-invertible", is_frr(m) == rinv.has_value(), idx);
        if (rinv) tally.record("right inverse verifies M*B = I", m * *rinv == Matrix::identity(ring, s), idx);
        if (m.is_square()) tally.record("square: non-singular iff FRR", is_nonsingular(m) == is_frr(m), idx);
    }

    const std::vector<Int> nsc_moduli = {4, 8, 9, 25};
    for (std::size_t idx = 0; idx < 300; ++idx) {
        const RingSpec ring(nsc_moduli[idx % nsc_moduli.size()]);
        const std::size_t s = 1 + rng.index(4);
        const std::size_t l = s + rng.index(4 - s + 1);
        const Matrix m = random_matrix(rng, ring, s, l);
        tally.record("NSC iff NSC of the residue-field reduction", is_nsc(m) == is_nsc(reduce_matrix_mod_gamma(m)),
                     idx);
    }

    for (std::size_t idx = 0; idx < 200; ++idx) {
        const RingSpec ring(idx % 2 == 0 ? 30 : 25);
        const std::size_t s = 1 + rng.index(3);
        // a scaled permutation has diag/adiag A*A^t by construction
        Matrix a(ring, s, s);
        std::vector<std::size_t> perm(s);
        for (std::size_t i = 0; i < s; ++i) perm[i] = i;
        for (std::size_t i = s; i-- > 1;) std::swap(perm[i], perm[rng.index(i + 1)]);
        for (std::size_t i = 0; i < s; ++i) {
            Int u = rng.below(ring.modulus());
            while (!ring.is_unit(u)) u = rng.below(ring.modulus());
            a.set(i, perm[i], u);
        }
        const AatClass cls = aat_classify(a);
        tally.record("structured AA^t implies non-singular",
                     (cls.kind == AatClass::Kind::other) || is_nonsingular(a), idx);
    }

    tally.print_summary("linalg");
    return tally.failures() == 0;
}

// ---------------------------------------------------------------------------
// dual-algebra: duality identities with oracle cross-checks
// ---------------------------------------------------------------------------

inline bool run_dual_algebra_suite(std::ostream& out) {
    out << "suite dual-algebra\n";
    Tally tally(out);
    SuiteRng rng(0xD0A1);

    const std::vector<Int> moduli = {4, 6, 8, 9, 30};
    for (std::size_t idx = 0; idx < 500; ++idx) {
        const RingSpec ring(moduli[idx % moduli.size()]);
        const std::size_t n = 1 + (idx / moduli.size()) % 4;
        const LinearCode c = random_code(rng, ring, n);
        const LinearCode d = random_code(rng, ring, n);

        const LinearCode cd = dual(c);
        tally.record("double dual identity", dual(cd) == c, idx);
        tally.record("cardinality duality |C|*|C^perp| = m^n",
                     c.cardinality() * cd.cardinality() == detail::ambient_size(ring, n), idx);
        tally.record("(C+D)^perp = C^perp meet D^perp", dual(sum(c, d)) == intersect(cd, dual(d)), idx);
        tally.record("hull symmetry H(C) = H(C^perp)", hull(c) == hull(cd), idx);
        if (detail::ambient_size(ring, n) <= 1000000)
            tally.record("oracle dual agreement", detail::oracle_dual_agrees(c, cd), idx);
    }

    tally.print_summary("dual-algebra");
    return tally.failures() == 0;
}

// ---------------------------------------------------------------------------
// theorem-2: the matrix-product hull/LCD results on a random corpus
// ---------------------------------------------------------------------------

inline bool run_theorem2_suite(std::ostream& out) {
    out << "suite theorem-2\n";
    Tally tally(out);
    SuiteRng rng(0x7E02);

    const std::vector<Int> moduli = {4, 6};
    for (std::size_t idx = 0; idx < 240; ++idx) {
        try {
            const RingSpec ring(moduli[idx % moduli.size()]);
            const std::size_t m_len = 1 + (idx / 2) % 2;
            const LinearCode c1 = random_code(rng, ring, m_len);
            const LinearCode c2 = random_code(rng, ring, m_len);
            const bool rectangular = idx % 6 == 5;
            const Matrix a = rectangular ? random_matrix(rng, ring, 2, 3) : random_nonsingular(rng, ring, 2);
            const MatrixProductSpec spec({c1, c2}, a);
            const LinearCode built = mpc_build(spec);

            if (!rectangular) {
                const LinearCode fast_dual = mpc_dual(spec);  // internally checked against the direct dual
                tally.record("dual identity vs oracle", oracle::agrees(oracle::brute_dual(built), fast_dual),
                             idx);
            }

            const MpcHullResult hr = mpc_hull(spec);
            tally.record("hull theorem path agrees with direct hull", hr.hull == hull(built), idx);
            tally.record("hull agrees with oracle", oracle::agrees(oracle::brute_hull(built), hr.hull), idx);

            const ConditionReport rep = lcd_conditions(spec);
            if (rep.any_iff_condition())
                tally.record("LCD biconditional under fired conditions", is_lcd(built) == rep.all_inputs_lcd,
                             idx);
            if (rep.mpc_lcd && *rep.mpc_lcd != is_lcd(built))
                tally.record("licensed verdict matches direct LCD", false, idx);
            else if (rep.mpc_lcd)
                tally.record("licensed verdict matches direct LCD", true, idx);

            if (!rectangular) {
                if (const auto reduced = mpc_identity_reduction(spec))
                    tally.record("four-condition reduction equals direct build", *reduced == built, idx);

                // a fixed orthogonal-rows non-singular matrix per ring exercises both
                // the diagonal-AA^t dual identity and the partitioned hull bound
                const Matrix a_orth = ring.modulus() == 4
                                          ? Matrix::from_rows(ring, {{1, 2}, {2, 1}})
                                          : Matrix::from_rows(ring, {{1, 2}, {2, 5}});
                const MatrixProductSpec ospec({c1, c2}, a_orth);
                tally.record("diagonal AA^t pushes duals through A",
                             dual(mpc_build(ospec)) == mpc_build(ospec.with_codes(ospec.dual_codes())), idx);
                tally.record("partitioned-orthogonality hull bound", orth_hull_bound(ospec, 1, c1, c2), idx);
            }
        } catch (const std::exception& e) {
            tally.record(std::string("unexpected exception: ") + e.what(), false, idx);
        }
    }

    tally.print_summary("theorem-2");
    return tally.failures() == 0;
}

// ---------------------------------------------------------------------------
// torsion: quotients, torsion codes, Tor identities, theorem constructions
// ---------------------------------------------------------------------------

inline bool run_torsion_suite(std::ostream& out) {
    out << "suite torsion\n";
    Tally tally(out);
    SuiteRng rng(0x70503);

    std::size_t converse_violations = 0;
    const std::vector<Int> moduli = {4, 8, 9};
    for (std::size_t idx = 0; idx < 300; ++idx) {
        try {
            const RingSpec ring(moduli[idx % moduli.size()]);
            const int e = ring.chain().e;
            const std::size_t n = 1 + (idx / 3) % 4;
            const LinearCode c = random_code(rng, ring, n);

            const TorsionFamily family = torsion_family(c);
            bool nested = true;
            for (std::size_t i = 0; i + 1 < family.members.size(); ++i)
                nested = nested && contains_code(family.members[i + 1], family.members[i]);
            tally.record("torsion nesting", nested, idx);

            for (int i = 0; i < e; ++i) {
                tally.record("Tor dual identity T_i(C^perp) = T_{e-1-i}(C)^perp", tor_dual_identity_check(c, i),
                             idx);
                tally.record("Tor hull inclusion H(T_i(C)) in T_{e-1}(H(C))", tor_hull_inclusion_check(c, i),
                             idx);
                tally.record("quotient agrees with oracle",
                             oracle::agrees(oracle::brute_quotient(c, i), quotient_by_gamma_power(c, i)), idx);
            }

            const bool c_lcd = is_lcd(c);
            if (c_lcd) {
                for (int i = 0; i < e; ++i)
                    tally.record("LCD propagates to torsion codes", is_lcd(family.members[i]), idx);
            } else {
                bool all_torsion_lcd = true;
                for (int i = 0; i < e; ++i) all_torsion_lcd = all_torsion_lcd && is_lcd(family.members[i]);
                if (all_torsion_lcd) ++converse_violations;
            }

            if (c_lcd) {
                const RingSpec field = ring.residue_field();
                const bool binary = field.modulus() == 2;

                // variant 1: orthogonal rows, any index list
                const Matrix ident = Matrix::identity(field, 2);
                tally.record("torsion theorem variant 1 (LCD)",
                             is_lcd(torsion_lcd_mpc(c, {e - 1, 0}, ident, 1).code), idx);
                if (!binary) {
                    const Matrix a_nsc = Matrix::from_rows(field, {{1, 1}, {1, 2}});  // AA^t = diag(2,2), NSC
                    const auto r = torsion_lcd_mpc(c, {e - 1, 0}, a_nsc, 1);
                    tally.record("torsion theorem variant 1 (LCD, NSC)", is_lcd(r.code), idx);
                    if (r.distances && r.distances->exact && r.code.cardinality() <= (1 << 20) &&
                        !r.code.is_zero()) {
                        const auto d = min_distance(r.code, 1 << 20);
                        const auto dd = min_distance(dual(r.code), 1 << 20);
                        tally.record("variant 1 distance equality",
                                     d && d->exact() && d->lower == r.distances->code_bound, idx);
                        tally.record("variant 1 dual distance equality",
                                     dd && dd->exact() && dd->lower == r.distances->dual_bound, idx);
                    }
                }

                // variant 2: antidiagonal AA^t needs three rows over these fields
                const Matrix a_adiag =
                    binary ? Matrix::from_rows(field, {{1, 1, 0}, {1, 1, 1}, {0, 1, 1}})
                           : Matrix::from_rows(field, {{1, 1, 1}, {0, 2, 1}, {1, 2, 2}});
                tally.record("torsion theorem variant 2 (LCD)",
                             is_lcd(torsion_lcd_mpc(c, {e - 1, 0, e - 1}, a_adiag, 2).code), idx);

                // variant 3: any non-singular A, equal indices
                const Matrix a_nsc3 = binary ? Matrix::from_rows(field, {{1, 1}, {0, 1}})
                                             : Matrix::from_rows(field, {{1, 1}, {1, 2}});
                for (int i : {0, e - 1}) {
                    const auto r = torsion_lcd_mpc(c, {i, i}, a_nsc3, 3);
                    tally.record("torsion theorem variant 3 (LCD)", is_lcd(r.code), idx);
                    if (r.distances && r.distances->exact && r.code.cardinality() <= (1 << 20) &&
                        !r.code.is_zero()) {
                        const auto d = min_distance(r.code, 1 << 20);
                        const auto dd = min_distance(dual(r.code), 1 << 20);
                        tally.record("variant 3 distance equality",
                                     d && d->exact() && d->lower == r.distances->code_bound, idx);
                        tally.record("variant 3 dual distance equality",
                                     dd && dd->exact() && dd->lower == r.distances->dual_bound, idx);
                    }
                }

                // variant 4: triangular A with monotone indices
                const Matrix upper = Matrix::from_rows(field, {{1, 1}, {0, 1}});
                const Matrix lower = Matrix::from_rows(field, {{1, 0}, {1, 1}});
                tally.record("torsion theorem variant 4 (upper, LCD)",
                             is_lcd(torsion_lcd_mpc(c, {0, e - 1}, upper, 4).code), idx);
                tally.record("torsion theorem variant 4 (lower, LCD)",
                             is_lcd(torsion_lcd_mpc(c, {e - 1, 0}, lower, 4).code), idx);
            }
        } catch (const std::exception& e) {
            tally.record(std::string("unexpected exception: ") + e.what(), false, idx);
        }
    }

    tally.note("converse-of-LCD-propagation violations observed: " + std::to_string(converse_violations));
    tally.print_summary("torsion");
    return tally.failures() == 0;
}

/// Dispatch by suite name; "all" runs everything.
inline bool run_suite(std::string_view name, std::ostream& out) {
    if (name == "linalg") return run_linalg_suite(out);
    if (name == "dual-algebra") return run_dual_algebra_suite(out);
    if (name == "theorem-2") return run_theorem2_suite(out);
    if (name == "torsion") return run_torsion_suite(out);
    if (name == "all") {
        bool ok = run_linalg_suite(out);
        ok = run_dual_algebra_suite(out) && ok;
        ok = run_theorem2_suite(out) && ok;
        ok = run_torsion_suite(out) && ok;
        return ok;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "' (available: linalg, dual-algebra, theorem-2, torsion, all)");
}

}  // namespace zmcodes::suites
