#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recipchow/hadamard.hpp"
#include "recipchow/rng.hpp"
#include "recipchow/verify.hpp"

#include "golden.hpp"
#include "test_util.hpp"

using namespace recipchow;
using rctest::mat;

TEST_CASE("bihomogeneous pairing form on four elements") {
    MultiPoly p = bichow_form(4, 2);
    CHECK(p == rctest::bichow_golden_4());

    const SubsetTable& t = SubsetTable::get(4, 2);
    std::vector<std::size_t> agroup, ggroup;
    for (std::size_t i = 0; i < t.size(); ++i) agroup.push_back(i);
    for (std::size_t i = 0; i < t.size(); ++i) ggroup.push_back(t.size() + i);
    CHECK(p.bidegree(agroup, ggroup) == std::pair<int, int>{3, 3});
    CHECK(p.total_degree() == 6); // C(4,2)
    CHECK(p.is_homogeneous());
}

TEST_CASE("specializing the first coordinate set recovers the cleared determinant") {
    LinearSpace l(mat({{1, 1, 1, 1}, {0, 1, 2, 3}}));
    MultiPoly p = bichow_form(4, 2);
    const SubsetTable& t = SubsetTable::get(4, 2);
    for (std::size_t r = 0; r < t.size(); ++r)
        p = p.substitute(r, l.plucker().coeffs[r]);
    // Drop the now-constant a-variables so the tables match.
    MultiPoly expect_in_12 = MultiPoly(p.vars());
    ChowForm cf = chow_form(l, VarConvention::gamma);
    for (const auto& [e, c] : cf.cleared.terms()) {
        Exps wide(12, 0);
        for (std::size_t i = 0; i < 6; ++i) wide[6 + i] = e[i];
        expect_in_12.add_term(wide, c);
    }
    CHECK(p == expect_in_12);
}

TEST_CASE("product hypersurface of two generic planes, symbolic") {
    MultiPoly h = hadamard_symbolic(4, 2);
    CHECK(h == rctest::hadamard_golden_4());
}

TEST_CASE("product hypersurface numeric: degree, membership, perturbation") {
    Rng rng(909);
    int done = 0;
    while (done < 6) {
        int n = static_cast<int>(rng.integer(4, 5));
        LinearSpace l = random_space(rng, 2, n);
        if (!l.plucker().full_support()) continue;
        RatMatrix m = random_matrix(rng, static_cast<std::size_t>(n - 2), n, 9);
        MultiPoly surf;
        try {
            surf = hadamard_surface(l, m);
        } catch (const input_error&) {
            continue;
        }
        CHECK(surf.total_degree() == n - 2);
        CHECK(surf.content() == BigRat(1));
        CHECK(surf.leading_term().second.sign() > 0);
        CHECK(membership_check(surf, l, m, 50, 1000 + done));

        // Any perturbed coefficient breaks vanishing on product points.
        MultiPoly broken = surf;
        broken.add_term(surf.terms().begin()->first, BigRat(1));
        CHECK_FALSE(membership_check(broken, l, m, 50, 2000 + done));

        // Vacuous check with no trials.
        CHECK(membership_check(surf, l, m, 0, 3000 + done));
        ++done;
    }
}

TEST_CASE("genericity failures are reported") {
    // Zero coordinate in the first input.
    LinearSpace thin(mat({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
    RatMatrix m = mat({{3, 1, 4, 1, 5}, {2, 7, 1, 8, 2}});
    CHECK_THROWS_WITH_AS(hadamard_surface(thin, m), doctest::Contains("genericity"), input_error);
}

TEST_CASE("meeting pairs annihilate the pairing form in both roles") {
    Rng rng(11011);
    int done = 0;
    while (done < 25) {
        int n = static_cast<int>(rng.integer(4, 5));
        int d = 2;
        LinearSpace l = random_space(rng, d, n);
        auto w = reciprocal_torus_point(l, rng);
        if (!w) continue;
        RatMatrix m(static_cast<std::size_t>(n - d), n);
        for (int j = 0; j < n; ++j) m.at(0, j) = (*w)[j];
        for (int i = 1; i < n - d; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = BigRat(rng.integer(-9, 9));
        if (rank(m) < static_cast<std::size_t>(n - d)) continue;

        const SubsetTable& td = SubsetTable::get(n, d);
        const SubsetTable& tc = SubsetTable::get(n, n - d);

        // First role: the reciprocal of l meets the row span of m.
        MultiPoly p1 = bichow_form(n, d);
        std::vector<BigRat> vals1;
        for (std::size_t r = 0; r < td.size(); ++r) vals1.push_back(l.plucker().coeffs[r]);
        PlueckerVector mp = orthocomplement(m).plucker;
        for (std::size_t r = 0; r < td.size(); ++r) vals1.push_back(mp.coeffs[r]);
        CHECK(p1.evaluate(vals1).is_zero());

        // Swapped role: the reciprocal of the row span of m meets l.
        MultiPoly p2 = bichow_form(n, n - d);
        std::vector<BigRat> vals2;
        PlueckerVector pm = pluecker_from_matrix(m);
        for (std::size_t r = 0; r < tc.size(); ++r) vals2.push_back(pm.coeffs[r]);
        PlueckerVector lp = orthocomplement(l.mat()).plucker;
        for (std::size_t r = 0; r < tc.size(); ++r) vals2.push_back(lp.coeffs[r]);
        CHECK(p2.evaluate(vals2).is_zero());
        ++done;
    }
}
