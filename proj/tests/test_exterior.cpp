#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recipchow/pluecker.hpp"
#include "recipchow/rng.hpp"

#include "test_util.hpp"

using namespace recipchow;
using rctest::mat;

TEST_CASE("sign exponent formula") {
    CHECK(sign_exponent({1, 2}, 2) == 6);
    CHECK(sign_exponent_parity(elems_to_mask({1, 2}, 4)) == 0);
    CHECK(sign_exponent({1, 3}, 2) == 7);
    CHECK(sign_exponent_parity(elems_to_mask({1, 3}, 4)) == 1);
    CHECK(sign_exponent({1, 2, 3}, 3) == 12);
    CHECK(sign_exponent_parity(elems_to_mask({1, 2, 3}, 5)) == 0);
    CHECK_THROWS_AS(sign_exponent({1, 2}, 3), input_error);
}

TEST_CASE("subset tables are lexicographic") {
    const SubsetTable& t = SubsetTable::get(4, 2);
    REQUIRE(t.size() == 6);
    CHECK(mask_to_elems(t.mask(0)) == std::vector<int>{1, 2});
    CHECK(mask_to_elems(t.mask(1)) == std::vector<int>{1, 3});
    CHECK(mask_to_elems(t.mask(5)) == std::vector<int>{3, 4});
    CHECK(t.rank(elems_to_mask({2, 4}, 4)) == 4);
    CHECK(subset_label(elems_to_mask({1, 4, 5}, 5)) == "145");
}

TEST_CASE("coordinates from a spanning matrix") {
    // Support matches the rank-3 matroid with circuits 124, 135, 2345.
    RatMatrix m5 = mat({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}});
    PlueckerVector p = pluecker_from_matrix(m5);
    auto at = [&](std::initializer_list<int> e) { return p.at_mask(elems_to_mask(e, 5)); };
    CHECK(at({1, 2, 4}) == BigRat(0));
    CHECK(at({1, 3, 5}) == BigRat(0));
    CHECK(at({1, 3, 4}) == BigRat(-1));
    CHECK(at({2, 3, 4}) == BigRat(1));
    CHECK(at({1, 2, 3}) == BigRat(1));
    CHECK(at({1, 2, 5}) == BigRat(1));
    CHECK(at({1, 4, 5}) == BigRat(1));
    CHECK(at({2, 3, 5}) == BigRat(1));
    CHECK(at({2, 4, 5}) == BigRat(-1));
    CHECK(at({3, 4, 5}) == BigRat(-1));

    RatMatrix interp = mat({{1, 1, 1, 1}, {0, 1, 2, 3}});
    PlueckerVector q = pluecker_from_matrix(interp);
    CHECK(q.coeffs == rctest::vec({1, 2, 3, 1, 2, 1}));

    PlueckerVector unit = pluecker_from_matrix(RatMatrix::identity(3));
    CHECK(unit.coeffs == rctest::vec({1}));

    CHECK_THROWS_AS(pluecker_from_matrix(mat({{1, 2, 3}, {2, 4, 6}})), input_error);
    CHECK_THROWS_AS(orthocomplement(mat({{1, 2, 3}, {2, 4, 6}})), input_error);
}

TEST_CASE("orthogonal complement") {
    Orthocomplement oc = orthocomplement(mat({{1, 1, 1}}));
    PlueckerVector norm = oc.plucker.display_normalized();
    CHECK(norm.coeffs == rctest::vec({1, -1, 1}));

    // First d unit vectors: the complement is the span of the rest.
    RatMatrix units(2, 5);
    units.at(0, 0) = BigRat(1);
    units.at(1, 1) = BigRat(1);
    Orthocomplement oc2 = orthocomplement(units);
    int nonzero = 0;
    for (const auto& c : oc2.plucker.coeffs)
        if (!c.is_zero()) ++nonzero;
    CHECK(nonzero == 1);
    CHECK(oc2.plucker.at_mask(elems_to_mask({3, 4, 5}, 5)).abs() == BigRat(1));

    // The complement of the interpolation plane is spanned by the two
    // second-difference vectors.
    RatMatrix interp = mat({{1, 1, 1, 1}, {0, 1, 2, 3}});
    Orthocomplement oc3 = orthocomplement(interp);
    RatMatrix known = mat({{-1, 2, -1, 0}, {0, -1, 2, -1}});
    PlueckerVector pk = pluecker_from_matrix(known);
    PlueckerVector pg = oc3.plucker;
    // Same projective point: cross-ratios of coordinates agree.
    BigRat scale;
    bool have = false;
    for (std::size_t r = 0; r < pk.coeffs.size(); ++r) {
        CHECK(pk.coeffs[r].is_zero() == pg.coeffs[r].is_zero());
        if (pk.coeffs[r].is_zero()) continue;
        BigRat ratio = pg.coeffs[r] / pk.coeffs[r];
        if (!have) { scale = ratio; have = true; }
        CHECK(ratio == scale);
    }
}

TEST_CASE("coordinates satisfy the three-term exchange relations") {
    Rng rng(9000);
    for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
        RatMatrix a = random_matrix(rng, d, n, 9);
        if (rank(a) < static_cast<std::size_t>(d)) continue;
        PlueckerVector p = pluecker_from_matrix(a);
        const SubsetTable& ts = SubsetTable::get(n, d - 2);
        for (std::uint32_t smask : ts.masks()) {
            std::vector<int> rest;
            for (int e = 1; e <= n; ++e)
                if (!(smask & (1u << (e - 1)))) rest.push_back(e);
            if (rest.size() < 4) continue;
            for (std::size_t q = 0; q + 3 < rest.size(); ++q) {
                int w = rest[q], x = rest[q + 1], y = rest[q + 2], z = rest[q + 3];
                auto at = [&](int u, int v) {
                    return p.at_mask(smask | (1u << (u - 1)) | (1u << (v - 1)));
                };
                CHECK(at(w, x) * at(y, z) - at(w, y) * at(x, z) + at(w, z) * at(x, y) ==
                      BigRat(0));
            }
        }
    }
}

TEST_CASE("transversal pairing") {
    Rng rng(314);
    // With the same coordinates on both sides the pairing is literally the
    // sum of squared coordinates.
    for (int t = 0; t < 10; ++t) {
        LinearSpace l = random_space(rng, 2, 4);
        BigRat self = pairing_transversal(l.plucker(), l.plucker());
        BigRat sum(0);
        for (const auto& c : l.plucker().coeffs) sum += c * c;
        CHECK(self == sum);
        CHECK(self.sign() > 0);

        // dual of the complement returns the original coordinates up to scale
        Orthocomplement oc = orthocomplement(l.mat());
        PlueckerVector dd = dual_plucker(oc.plucker);
        BigRat pair = pairing_transversal(l.plucker(), dd);
        CHECK_FALSE(pair.is_zero());
    }

    // A shared vector forces the pairing to vanish.
    for (int t = 0; t < 10; ++t) {
        RatMatrix shared(1, 4);
        shared.at(0, 0) = BigRat(1);
        shared.at(0, 1) = BigRat(1);
        RatMatrix a(2, 4), b(2, 4);
        for (int j = 0; j < 4; ++j) {
            a.at(0, j) = shared.at(0, j);
            b.at(0, j) = shared.at(0, j);
            a.at(1, j) = BigRat(rng.integer(-9, 9));
            b.at(1, j) = BigRat(rng.integer(-9, 9));
        }
        if (rank(a) < 2 || rank(b) < 2) continue;
        PlueckerVector pa = pluecker_from_matrix(a);
        Orthocomplement bperp = orthocomplement(b);
        CHECK(pairing_transversal(pa, dual_plucker(pluecker_from_matrix(b))).is_zero());
        (void)bperp;
    }
}

TEST_CASE("row operations scale the whole coordinate vector") {
    Rng rng(217);
    for (int t = 0; t < 10; ++t) {
        RatMatrix a = random_matrix(rng, 2, 5, 9);
        if (rank(a) < 2) continue;
        RatMatrix g(2, 2);
        g.at(0, 0) = rng.nonzero_rat(5, 2);
        g.at(0, 1) = rng.rat(5, 2);
        g.at(1, 0) = rng.rat(5, 2);
        g.at(1, 1) = rng.nonzero_rat(5, 2);
        if (det_exact(g).is_zero()) continue;
        PlueckerVector pa = pluecker_from_matrix(a);
        PlueckerVector pga = pluecker_from_matrix(g * a);
        BigRat dg = det_exact(g);
        for (std::size_t r = 0; r < pa.coeffs.size(); ++r)
            CHECK(pga.coeffs[r] == dg * pa.coeffs[r]);
    }
}

TEST_CASE("double complement returns the same subspace") {
    Rng rng(5005);
    for (int t = 0; t < 10; ++t) {
        LinearSpace l = random_space(rng, 2, 5);
        RatMatrix back = orthocomplement(orthocomplement(l.mat()).mat).mat;
        PlueckerVector p1 = l.plucker().display_normalized();
        PlueckerVector p2 = pluecker_from_matrix(back).display_normalized();
        CHECK(p1.coeffs == p2.coeffs);
    }
}

TEST_CASE("pairing swaps with the predicted sign") {
    Rng rng(606);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(rng.integer(3, 6));
        int d = static_cast<int>(rng.integer(1, n - 1));
        RatMatrix a = random_matrix(rng, d, n, 9);
        RatMatrix b = random_matrix(rng, n - d, n, 9);
        if (rank(a) < static_cast<std::size_t>(d) || rank(b) < static_cast<std::size_t>(n - d))
            continue;
        PlueckerVector pl = pluecker_from_matrix(a);
        PlueckerVector pm = pluecker_from_matrix(b);
        BigRat r1 = pairing_transversal(pl, dual_plucker(pm));
        BigRat r2 = pairing_transversal(pm, dual_plucker(pl));
        BigRat sign = (static_cast<long>(d) * (n - d)) % 2 == 0 ? BigRat(1) : BigRat(-1);
        CHECK(r1 == sign * r2);
    }
}

TEST_CASE("dual pairing signs on four elements") {
    // The classical rank-3 curve matrix pairs each 2-subset with its
    // complement: 12 <-> +34, 13 <-> -24, 14 <-> +23, 23 <-> +14,
    // 24 <-> -13, 34 <-> +12.
    std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> table{
        {{1, 2}, {3, 4}, +1}, {{1, 3}, {2, 4}, -1}, {{1, 4}, {2, 3}, +1},
        {{2, 3}, {1, 4}, +1}, {{2, 4}, {1, 3}, -1}, {{3, 4}, {1, 2}, +1}};
    const SubsetTable& t = SubsetTable::get(4, 2);
    for (auto& [i, comp, sign] : table) {
        std::vector<BigRat> beta(t.size(), BigRat(0));
        beta[t.rank(elems_to_mask(comp, 4))] = BigRat(1);
        std::vector<BigRat> gamma = functional_from_wedge(4, 2, beta);
        CHECK(gamma[t.rank(elems_to_mask(i, 4))] == BigRat(sign));
    }
}

TEST_CASE("wedge helpers") {
    // (e_1 + e_2) wedged against coefficients on 1-subsets of [3].
    std::vector<BigRat> base = rctest::vec({1, 0, 2}); // e1 + 2 e3
    std::vector<BigRat> w = rctest::vec({0, 1, 0});    // e2
    std::vector<BigRat> out = wedge_with_vector(3, 1, base, w);
    // e1^e2 = +e12, e3^e2 = -e23
    CHECK(out == rctest::vec({1, 0, -2}));

    PlueckerVector p{3, 1, rctest::vec({1, 2, 3})};
    PlueckerVector scaled = diag_scale(p, rctest::vec({2, 3, 5}));
    CHECK(scaled.coeffs == rctest::vec({2, 6, 15}));
}
