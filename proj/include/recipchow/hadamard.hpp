#pragma once

#include <cstdint>

#include "recipchow/simplicial.hpp"

namespace recipchow {

/// The symmetric bihomogeneous form on pairs of spaces detecting a common
/// torus point: the forest expansion with both coefficient sets symbolic.
/// Bidegree (C(n-1,d), C(n-1,d-1)) in (a, g); total degree C(n,d).
MultiPoly bichow_form(int n, int d);

/// Hypersurface cut out by the coordinatewise product of the two spaces.
/// Computed through the forest expansion with per-vertex facet counts as
/// exponents, then stripped of the common monomial factor. Requires full
/// coordinate support of both inputs; degree C(n-2, d-1). Content 1,
/// positive leading coefficient.
MultiPoly hadamard_surface(const LinearSpace& l, const RatMatrix& m_rows);

/// Fully symbolic variant over variables a_<I>, g_<I>, x_1..x_n.
MultiPoly hadamard_symbolic(int n, int d);

/// Samples coordinatewise products of points of the two spaces and checks
/// that the polynomial vanishes on all of them and does not vanish at a
/// random unrelated point. trials = 0 is vacuously true.
bool membership_check(const MultiPoly& poly, const LinearSpace& l, const RatMatrix& m_rows,
                      int trials, std::uint64_t seed);

} // namespace recipchow
