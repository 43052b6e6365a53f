#pragma once

#include <functional>
#include <optional>

#include "recipchow/detrep.hpp"

namespace recipchow {

/// Incidence operator of the complete complex of dimension d-1 on n
/// vertices: rows are (d-1)-subsets, columns d-subsets, entry (I, J) is
/// (-1)^j when I is J minus its j-th smallest element (0-based), else 0.
IntMatrix boundary_matrix(int n, int d);

/// Closed-form column table of the uniform matroid: v_I is the unit vector
/// of I minus n when n lies in I, and an alternating sum of unit vectors
/// otherwise. Equals the reduced-basis columns up to per-column sign.
VectorTable uniform_v_vectors(int n, int d);

struct Forest {
    std::vector<std::size_t> cols; // column ranks into the d-subset table
    mpz_class det;                 // minor of the root-deleted incidence rows
    mpz_class coefficient;         // det squared
};

/// Enumerates the column subsets of size C(n-1, d-1) whose root-deleted
/// minor is nonsingular, in lexicographic order. For each one the minor is
/// computed twice, by fraction-free elimination and through the invariant
/// factors of the presentation matrix; a disagreement is an internal error.
/// Subject to the enumeration envelope C(n, d) <= 20.
void enumerate_spanning_forests(int n, int d, const std::function<void(const Forest&)>& visit);

/// Sum over spanning forests of c_F * prod_{I in F} g_I * prod_{I not in F} a_I.
/// With alpha values given, the a-part is folded into the coefficients and
/// the variables are just g_<I>; otherwise both sets are symbolic.
MultiPoly forest_expansion(int n, int d, const std::optional<std::vector<BigRat>>& alpha);

/// Tree-sum pairing of two 2 x n matrices: over spanning trees of the
/// complete graph, the product of the c-minors on tree edges times the
/// a-minors off the tree. Zero exactly when the two represented binary
/// forms share a root. Requires pairwise independent columns of a.
BigRat tree_resultant(const RatMatrix& a, const RatMatrix& c);

} // namespace recipchow
