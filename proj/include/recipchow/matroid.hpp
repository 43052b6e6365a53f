#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recipchow/pluecker.hpp"

namespace recipchow {

/// Rank-d matroid on [n] given by its list of bases. The basis-exchange
/// axiom is validated on construction for n <= 8.
class Matroid {
public:
    static Matroid from_bases(int n, int d, std::vector<std::uint32_t> bases);
    static Matroid uniform(int d, int n);

    int n() const { return n_; }
    int rank() const { return d_; }
    const std::vector<std::uint32_t>& bases() const { return bases_; }
    bool is_basis(std::uint32_t mask) const { return basis_set_.count(mask) > 0; }

    /// Independent sets are the subsets of bases (only valid for |S| <= rank).
    bool independent(std::uint32_t mask) const;

    /// Elements contained in no basis.
    std::vector<int> loops() const;
    bool loopless() const { return loops().empty(); }

private:
    Matroid(int n, int d, std::vector<std::uint32_t> bases);
    int n_, d_;
    std::vector<std::uint32_t> bases_; // lex subset order
    std::unordered_set<std::uint32_t> basis_set_;
};

/// Bases are the d-subsets carrying a nonzero coordinate.
Matroid from_support(const PlueckerVector& p);

struct BccData {
    std::vector<std::uint32_t> circuits;        // minimal dependent sets, by size then lex
    std::vector<std::uint32_t> broken_circuits; // circuits minus their maxima
    std::vector<std::uint32_t> facets;          // bases containing no broken circuit
};

/// Circuits and broken circuits in the fixed element order 1 < ... < n.
/// Throws input_error naming a loop when one exists.
BccData circuits_and_broken(const Matroid& m);

/// Facets of the broken-circuit complex restricted to bases, and their
/// count, which is the degree of the reciprocal variety.
std::pair<std::vector<std::uint32_t>, std::size_t> bcc_facets_degree(const Matroid& m);

struct BasisOrder {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers; // (lower, upper)
    std::vector<std::uint32_t> maximal;
};

/// Covering relations B < B' (|B u B'| = d+1 and B' \ B the maximum of the
/// unique circuit in the union). Asserts acyclicity and that the maximal
/// elements are exactly the facets; both failures are internal errors.
BasisOrder basis_order_check(const Matroid& m);

} // namespace recipchow
