#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "recipchow/matroid.hpp"
#include "recipchow/rng.hpp"

#include "test_util.hpp"

using namespace recipchow;
using rctest::mat;

namespace {

LinearSpace n5_space() {
    return LinearSpace(mat({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
}

std::set<std::string> labels(const std::vector<std::uint32_t>& masks) {
    std::set<std::string> out;
    for (std::uint32_t m : masks) out.insert(subset_label(m));
    return out;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("matroid from coordinate support") {
    LinearSpace l = n5_space();
    const Matroid& m = l.matroid();
    CHECK(m.bases().size() == 8);
    CHECK_FALSE(m.is_basis(elems_to_mask({1, 2, 4}, 5)));
    CHECK_FALSE(m.is_basis(elems_to_mask({1, 3, 5}, 5)));
    CHECK(m.is_basis(elems_to_mask({1, 2, 3}, 5)));

    PlueckerVector full{4, 2, rctest::vec({1, 1, 1, 1, 1, 1})};
    Matroid u = from_support(full);
    CHECK(u.bases().size() == 6);

    PlueckerVector single{4, 2, rctest::vec({0, 1, 0, 0, 0, 0})};
    Matroid one = from_support(single);
    CHECK(one.bases().size() == 1);

    // A support violating basis exchange is rejected.
    PlueckerVector bad{4, 2, rctest::vec({1, 0, 0, 0, 0, 1})};
    CHECK_THROWS_WITH_AS(from_support(bad), doctest::Contains("not a Pluecker"), input_error);

    PlueckerVector zero{4, 2, rctest::vec({0, 0, 0, 0, 0, 0})};
    CHECK_THROWS_AS(from_support(zero), input_error);
}

TEST_CASE("circuits and broken circuits") {
    LinearSpace l = n5_space();
    BccData bcc = circuits_and_broken(l.matroid());
    CHECK(labels(bcc.circuits) == std::set<std::string>{"124", "135", "2345"});
    CHECK(labels(bcc.broken_circuits) == std::set<std::string>{"12", "13", "234"});

    Matroid u24 = Matroid::uniform(2, 4);
    BccData b24 = circuits_and_broken(u24);
    CHECK(b24.circuits.size() == 4); // all 3-subsets
    CHECK(labels(b24.broken_circuits) == std::set<std::string>{"12", "13", "23"});

    Matroid single = Matroid::from_bases(3, 3, {elems_to_mask({1, 2, 3}, 3)});
    CHECK(circuits_and_broken(single).circuits.empty());

    // Loops are reported by name.
    Matroid loopy = Matroid::from_bases(3, 2, {elems_to_mask({1, 2}, 3)});
    CHECK_THROWS_WITH_AS(circuits_and_broken(loopy), doctest::Contains("element 3"), input_error);
}

TEST_CASE("broken-circuit facets and degree") {
    auto [facets, deg] = bcc_facets_degree(n5_space().matroid());
    CHECK(labels(facets) == std::set<std::string>{"145", "235", "245", "345"});
    CHECK(deg == 4);

    auto [f24, d24] = bcc_facets_degree(Matroid::uniform(2, 4));
    CHECK(d24 == 3);
    CHECK(labels(f24) == std::set<std::string>{"14", "24", "34"});

    for (int n = 3; n <= 8; ++n)
        for (int d = 2; d < n; ++d) {
            auto [f, degree] = bcc_facets_degree(Matroid::uniform(d, n));
            CHECK(degree == static_cast<std::size_t>(binom(n - 1, d - 1)));
            for (std::uint32_t msk : f) CHECK((msk & (1u << (n - 1))) != 0);
        }
}

TEST_CASE("basis partial order") {
    BasisOrder order = basis_order_check(n5_space().matroid());
    CHECK(labels(order.maximal) == std::set<std::string>{"145", "235", "245", "345"});

    // Every basis of the uniform matroid reaches one containing the top
    // element by a covering chain.
    Matroid u = Matroid::uniform(2, 4);
    BasisOrder uo = basis_order_check(u);
    for (std::uint32_t msk : uo.maximal) CHECK((msk & (1u << 3)) != 0);
    bool covers_123_up = false;
    for (auto [lo, hi] : uo.covers)
        if (subset_label(lo) == "12" && subset_label(hi) == "14") covers_123_up = true;
    CHECK(covers_123_up);

    Matroid single = Matroid::from_bases(4, 4, {elems_to_mask({1, 2, 3, 4}, 4)});
    BasisOrder so = basis_order_check(single);
    CHECK(so.covers.empty());
    CHECK(so.maximal.size() == 1);
}

TEST_CASE("order maxima equal facets on random spaces") {
    Rng rng(8888);
    for (int t = 0; t < 25; ++t) {
        int d = static_cast<int>(rng.integer(2, 4));
        int n = static_cast<int>(rng.integer(d + 1, 7));
        LinearSpace l = random_space(rng, d, n, true);
        // both the acyclicity and maximal-vs-facet assertions run inside
        basis_order_check(l.matroid());
    }
}
