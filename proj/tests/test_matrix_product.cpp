#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <zmcodes/matrix_product.hpp>
#include <zmcodes/oracle.hpp>

using namespace zmcodes;

namespace {

LinearCode random_code(std::mt19937_64& rng, const RingSpec& ring, std::size_t n) {
    const std::size_t k = static_cast<std::size_t>(rng() % (n + 1));
    std::vector<std::vector<Int>> rows(k, std::vector<Int>(n));
    for (auto& row : rows)
        for (Int& v : row) v = static_cast<Int>(rng() % static_cast<std::uint64_t>(ring.modulus()));
    return LinearCode::from_generators(ring, n, rows);
}

struct Z30Example {
    RingSpec ring{30};
    LinearCode c1 = LinearCode::from_generators(ring, 2, {{15, 0}, {0, 15}});
    LinearCode c2 = LinearCode::from_generators(ring, 2, {{10, 0}, {0, 10}});
    Matrix a = Matrix::from_rows(ring, {{6, 5}, {5, 6}});
};

}  // namespace

TEST_CASE("spec validation") {
    Z30Example ex;
    CHECK_THROWS_AS(MatrixProductSpec({}, ex.a), std::invalid_argument);
    CHECK_THROWS_AS(MatrixProductSpec({ex.c1}, ex.a), std::invalid_argument);  // 1 code vs 2 rows
    CHECK_THROWS_AS(MatrixProductSpec({ex.c1, LinearCode::zero_code(ex.ring, 3)}, ex.a),
                    std::invalid_argument);  // mixed lengths
    CHECK_THROWS_AS(MatrixProductSpec({ex.c1, ex.c2}, Matrix(RingSpec(6), 2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(MatrixProductSpec({ex.c1, ex.c2, ex.c1}, Matrix(ex.ring, 3, 2)),
                    std::invalid_argument);  // s > l
}

TEST_CASE("the Z30 example: [C1 C2]A = [C2 C1]") {
    Z30Example ex;
    const LinearCode lhs = mpc_build(MatrixProductSpec({ex.c1, ex.c2}, ex.a));
    const LinearCode rhs = mpc_build(MatrixProductSpec({ex.c2, ex.c1}, Matrix::identity(ex.ring, 2)));
    CHECK(lhs == rhs);
    CHECK(lhs.length() == 4);
}

TEST_CASE("direct sum via the identity matrix") {
    Z30Example ex;
    const LinearCode ds = mpc_build(MatrixProductSpec({ex.c1, ex.c1}, Matrix::identity(ex.ring, 2)));
    CHECK(ds.cardinality() == ex.c1.cardinality() * ex.c1.cardinality());
    const std::vector<Int> w = {15, 0, 0, 15};
    CHECK(ds.member(w));
    const std::vector<Int> bad = {15, 0, 1, 0};
    CHECK_FALSE(ds.member(bad));
}

TEST_CASE("Plotkin construction over Z2") {
    const RingSpec z2(2);
    const LinearCode full1 = LinearCode::full_space(z2, 1);
    const Matrix plotkin = Matrix::from_rows(z2, {{1, 1}, {0, 1}});
    const LinearCode mpc = mpc_build(MatrixProductSpec({full1, full1}, plotkin));
    CHECK(mpc == LinearCode::full_space(z2, 2));  // all 4 (u | u+v) words
}

TEST_CASE("column-major flattening makes Plotkin literal") {
    const RingSpec z2(2);
    const LinearCode u = LinearCode::from_generators(z2, 3, {{1, 1, 1}});
    const LinearCode v = LinearCode::from_generators(z2, 3, {{1, 0, 1}});
    const Matrix plotkin = Matrix::from_rows(z2, {{1, 1}, {0, 1}});
    const LinearCode mpc = mpc_build(MatrixProductSpec({u, v}, plotkin));
    const std::vector<Int> w = {1, 1, 1, 0, 1, 0};  // (u | u+v) with u = 111, v = 101
    CHECK(mpc.member(w));
}

TEST_CASE("dual identity on the Z30 example") {
    Z30Example ex;
    const MatrixProductSpec spec({ex.c1, ex.c2}, ex.a);
    const LinearCode d = mpc_dual(spec);  // internally compared with the direct dual
    CHECK(d == dual(mpc_build(spec)));
    CHECK(oracle::agrees(oracle::brute_dual(mpc_build(spec)), d));
}

TEST_CASE("dual identity with the identity matrix") {
    Z30Example ex;
    const MatrixProductSpec spec({ex.c1, ex.c2}, Matrix::identity(ex.ring, 2));
    CHECK(mpc_dual(spec) ==
          mpc_build(MatrixProductSpec({dual(ex.c1), dual(ex.c2)}, Matrix::identity(ex.ring, 2))));
}

TEST_CASE("dual of the full Plotkin space is zero") {
    const RingSpec z2(2);
    const LinearCode full1 = LinearCode::full_space(z2, 1);
    const MatrixProductSpec spec({full1, full1}, Matrix::from_rows(z2, {{1, 1}, {0, 1}}));
    CHECK(mpc_dual(spec).is_zero());
}

TEST_CASE("mpc_dual rejects singular or rectangular A") {
    Z30Example ex;
    CHECK_THROWS_AS(mpc_dual(MatrixProductSpec({ex.c1, ex.c2}, Matrix(ex.ring, 2, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(mpc_dual(MatrixProductSpec({ex.c1, ex.c2}, Matrix(ex.ring, 2, 3))),
                    std::invalid_argument);
}

TEST_CASE("hull via theorem case 1 on the Z30 example") {
    Z30Example ex;
    const MatrixProductSpec spec({ex.c1, ex.c2}, ex.a);
    const MpcHullResult hr = mpc_hull(spec);
    CHECK(hr.provenance == HullProvenance::theorem_case1);
    CHECK(hr.hull.is_zero());
    CHECK(hr.hull == hull(mpc_build(spec)));
}

TEST_CASE("hull via theorem case 2 with a diagonal matrix") {
    const RingSpec z4(4);
    const LinearCode c1 = LinearCode::from_generators(z4, 2, {{1, 1}});
    const LinearCode c2 = LinearCode::from_generators(z4, 2, {{2, 0}});
    const MatrixProductSpec spec({c1, c2}, Matrix::identity(z4, 2));
    const MpcHullResult hr = mpc_hull(spec);
    CHECK(hr.provenance == HullProvenance::theorem_case2);
    CHECK(hr.hull == hull(mpc_build(spec)));
    CHECK(hr.hull == mpc_build(MatrixProductSpec({hull(c1), hull(c2)}, Matrix::identity(z4, 2))));
}

TEST_CASE("hull falls back to the direct computation") {
    const RingSpec z4(4);
    const LinearCode c1 = LinearCode::from_generators(z4, 2, {{1, 1}});
    const LinearCode c2 = LinearCode::from_generators(z4, 2, {{1, 3}});
    const Matrix a = Matrix::from_rows(z4, {{1, 1}, {1, 3}});  // det 2, singular
    const MatrixProductSpec spec({c1, c2}, a);
    const MpcHullResult hr = mpc_hull(spec);
    const LinearCode direct = hull(mpc_build(spec));
    CHECK(hr.hull == direct);
    CHECK(oracle::agrees(oracle::brute_hull(mpc_build(spec)), hr.hull));
}

TEST_CASE("LCD conditions on the Z30 example") {
    Z30Example ex;
    const std::vector<std::pair<LinearCode, LinearCode>> combos = {
        {ex.c1, ex.c1}, {ex.c2, ex.c2}, {ex.c1, ex.c2}, {ex.c2, ex.c1}};
    for (const auto& [x, y] : combos) {
        const MatrixProductSpec spec({x, y}, ex.a);
        const ConditionReport rep = lcd_conditions(spec);
        CHECK(rep.aat_diag);
        CHECK(rep.all_inputs_lcd);
        REQUIRE(rep.mpc_lcd.has_value());
        CHECK(*rep.mpc_lcd);
        CHECK(is_lcd(mpc_build(spec)));
    }
}

TEST_CASE("LCD conditions on the Z25 example") {
    const RingSpec z25(25);
    const LinearCode c1 = cyclic_code(z25, 12, {1, 1});
    const Matrix a = Matrix::from_rows(z25, {{1, 7}, {7, 1}});
    const MatrixProductSpec spec({c1, c1}, a);
    const ConditionReport rep = lcd_conditions(spec);
    CHECK(rep.aat_adiag_palindrome);     // condition 4
    CHECK(rep.equal_codes_nonsingular);  // condition 7
    CHECK(rep.all_inputs_lcd);
    REQUIRE(rep.mpc_lcd.has_value());
    CHECK(*rep.mpc_lcd);

    const LinearCode mpc = mpc_build(spec);
    CHECK(mpc.length() == 24);
    CHECK(mpc.cardinality() == boost::multiprecision::pow(BigInt(25), 22));
    CHECK(is_lcd(mpc));
}

TEST_CASE("condition 5: upper triangular with nested codes") {
    const RingSpec z2(2);
    const LinearCode small = LinearCode::from_generators(z2, 2, {{1, 1}});
    const LinearCode big = LinearCode::full_space(z2, 2);
    const MatrixProductSpec spec({small, big}, Matrix::from_rows(z2, {{1, 1}, {0, 1}}));
    const ConditionReport rep = lcd_conditions(spec);
    CHECK(rep.upper_tri_nested);
    CHECK(is_lcd(mpc_build(spec)) == rep.all_inputs_lcd);
}

TEST_CASE("four-condition reduction") {
    const RingSpec z30(30);
    std::mt19937_64 rng(41);
    const LinearCode c1 = random_code(rng, z30, 2);
    const LinearCode c2 = random_code(rng, z30, 2);

    const Matrix diag = Matrix::from_rows(z30, {{7, 0}, {0, 11}});
    const auto reduced = mpc_identity_reduction(MatrixProductSpec({c1, c2}, diag));
    REQUIRE(reduced.has_value());
    CHECK(*reduced == mpc_build(MatrixProductSpec({c1, c2}, diag)));

    const RingSpec z4(4);
    const LinearCode c = LinearCode::from_generators(z4, 2, {{1, 2}});
    const Matrix ns = Matrix::from_rows(z4, {{1, 1}, {0, 1}});
    const auto reduced2 = mpc_identity_reduction(MatrixProductSpec({c, c}, ns));
    REQUIRE(reduced2.has_value());
    CHECK(*reduced2 == mpc_build(MatrixProductSpec({c, c}, ns)));

    // non-nested codes, non-triangular matrix: no reduction
    const LinearCode e1 = LinearCode::from_generators(z4, 2, {{1, 0}});
    const LinearCode e2 = LinearCode::from_generators(z4, 2, {{0, 1}});
    const Matrix mixed = Matrix::from_rows(z4, {{1, 1}, {1, 2}});
    REQUIRE(is_nonsingular(mixed));
    CHECK_FALSE(mpc_identity_reduction(MatrixProductSpec({e1, e2}, mixed)).has_value());

    CHECK_THROWS_AS(mpc_identity_reduction(MatrixProductSpec({c, c}, Matrix(z4, 2, 2))), std::invalid_argument);
}

TEST_CASE("partitioned-orthogonality hull bound with the Turyn matrix") {
    const RingSpec z2(2);
    const Matrix turyn = Matrix::from_rows(z2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    const LinearCode c1 = LinearCode::from_generators(z2, 2, {{1, 0}});  // LCD
    const LinearCode c2 = LinearCode::full_space(z2, 2);                 // LCD
    REQUIRE(is_lcd(c1));
    REQUIRE(is_lcd(c2));
    const MatrixProductSpec spec({c1, c1, c2}, turyn);
    CHECK(orth_hull_bound(spec, 2, c1, c2));
    CHECK(is_lcd(mpc_build(spec)));

    const MatrixProductSpec spec2({c2, c2, c1}, turyn);
    CHECK(orth_hull_bound(spec2, 2, c2, c1));
    CHECK(is_lcd(mpc_build(spec2)));

    // the identity matrix trivially has the property: hull of a direct sum
    const MatrixProductSpec ds({c1, c2}, Matrix::identity(z2, 2));
    CHECK(orth_hull_bound(ds, 1, c1, c2));
}

TEST_CASE("hull bound inclusion verified against brute force over Z4") {
    const RingSpec z4(4);
    const Matrix a = Matrix::from_rows(z4, {{1, 2}, {2, 1}});  // orthogonal rows, det 1
    REQUIRE(partition_blocks(a, 1).has_value());
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        const LinearCode c1 = random_code(rng, z4, 2);
        const LinearCode c2 = random_code(rng, z4, 2);
        const MatrixProductSpec spec({c1, c2}, a);
        CHECK(orth_hull_bound(spec, 1, c1, c2));
        // the inclusion, re-derived from the brute-force hull
        const auto brute = oracle::brute_hull(mpc_build(spec));
        const Matrix a_inv_t = right_inverse(a)->transpose();
        const LinearCode rhs = mpc_build(MatrixProductSpec({hull(c1), hull(c2)}, a_inv_t));
        for (const auto& w : brute) CHECK(rhs.member(w));
    }
}

TEST_CASE("hull bound rejects bad hypotheses") {
    const RingSpec z4(4);
    const LinearCode c = LinearCode::from_generators(z4, 2, {{1, 0}});
    const Matrix not_orth = Matrix::from_rows(z4, {{1, 1}, {1, 2}});
    REQUIRE(is_nonsingular(not_orth));
    CHECK_THROWS_AS(orth_hull_bound(MatrixProductSpec({c, c}, not_orth), 1, c, c), std::invalid_argument);

    const Matrix orth = Matrix::from_rows(z4, {{1, 2}, {2, 1}});
    const LinearCode other = LinearCode::from_generators(z4, 2, {{0, 1}});
    CHECK_THROWS_AS(orth_hull_bound(MatrixProductSpec({c, c}, orth), 1, c, other), std::invalid_argument);
}

TEST_CASE("distance bounds over a residue field") {
    const RingSpec f2(2);
    const LinearCode c = LinearCode::from_generators(f2, 3, {{1, 1, 1}});
    const Matrix nsc = Matrix::from_rows(f2, {{1, 1}, {1, 0}});
    REQUIRE(is_nsc(nsc));
    const DistanceBounds b = mpc_distance_bounds(MatrixProductSpec({c, c}, nsc));
    CHECK(b.exact);  // equal codes are trivially nested
    CHECK(b.code_bound == 3);
    const auto actual = min_distance(mpc_build(MatrixProductSpec({c, c}, nsc)));
    REQUIRE(actual.has_value());
    CHECK(actual->lower == b.code_bound);

    CHECK_THROWS_AS(mpc_distance_bounds(MatrixProductSpec({c, c}, Matrix::identity(f2, 2))),
                    std::invalid_argument);  // identity is not NSC
    const RingSpec z4(4);
    const LinearCode c4 = LinearCode::from_generators(z4, 2, {{1, 1}});
    const Matrix a4 = Matrix::from_rows(z4, {{1, 1}, {1, 2}});
    CHECK_THROWS_AS(mpc_distance_bounds(MatrixProductSpec({c4, c4}, a4)), std::invalid_argument);
}

TEST_CASE("Plotkin distance equality under nesting") {
    const RingSpec f2(2);
    const Matrix plotkin = Matrix::from_rows(f2, {{1, 1}, {0, 1}});
    REQUIRE(is_nsc(plotkin));
    std::mt19937_64 rng(47);
    int tested = 0;
    for (int iter = 0; iter < 60 && tested < 20; ++iter) {
        const LinearCode c2 = random_code(rng, f2, 3);
        const LinearCode c1 = sum(c2, random_code(rng, f2, 3));  // C2 ⊆ C1
        if (c1.is_zero() || c2.is_zero() || dual(c1).is_zero() || dual(c2).is_zero()) continue;
        ++tested;
        const MatrixProductSpec spec({c1, c2}, plotkin);
        const DistanceBounds b = mpc_distance_bounds(spec);
        CHECK(b.exact);
        const auto d = min_distance(mpc_build(spec));
        REQUIRE(d.has_value());
        CHECK(d->lower == b.code_bound);
        const auto dd = min_distance(dual(mpc_build(spec)));
        REQUIRE(dd.has_value());
        CHECK(dd->lower == b.dual_bound);
    }
    CHECK(tested >= 10);
}

TEST_CASE("random corpus: dual identity, hulls, conditions, reductions") {
    std::mt19937_64 rng(53);
    for (Int m : {4, 6}) {
        const RingSpec ring(m);
        for (int iter = 0; iter < 40; ++iter) {
            const std::size_t len = 1 + static_cast<std::size_t>(rng() % 2);
            const LinearCode c1 = random_code(rng, ring, len);
            const LinearCode c2 = random_code(rng, ring, len);
            Matrix a = Matrix::identity(ring, 2);
            for (int tries = 0; tries < 50; ++tries) {
                Matrix cand(ring, 2, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        cand.set(i, j, static_cast<Int>(rng() % static_cast<std::uint64_t>(m)));
                if (is_nonsingular(cand)) {
                    a = cand;
                    break;
                }
            }
            const MatrixProductSpec spec({c1, c2}, a);
            const LinearCode built = mpc_build(spec);
            CHECK(mpc_dual(spec) == dual(built));
            CHECK(mpc_hull(spec).hull == hull(built));
            const ConditionReport rep = lcd_conditions(spec);
            if (rep.any_iff_condition()) CHECK(is_lcd(built) == rep.all_inputs_lcd);
            if (const auto red = mpc_identity_reduction(spec)) CHECK(*red == built);
        }
    }
}
