#pragma once

#include <cstdint>

#include "recipchow/rng.hpp"

namespace recipchow {

/// Coefficients (by power of the first parameter) of the binary form whose
/// roots are the fiber of the plane projection over [y1 : y2].
std::vector<BigRat> fiber_form(const LinearSpace& l, const BigRat& y1, const BigRat& y2);

enum class FiberStatus {
    all_real_distinct,  // squarefree with every root real
    collision_all_real, // repeated root, still no nonreal one
    nonreal,            // at least one nonreal root
    degenerate,         // form vanished identically
};

FiberStatus fiber_status(const LinearSpace& l, const BigRat& y1, const BigRat& y2);

struct FiberCheckReport {
    int samples = 0;
    int collisions = 0;
    bool all_real = false;
    std::uint64_t seed = 0;
};

/// Samples fibers of a plane and counts distinct real roots exactly. A
/// nonreal root on any sample makes the report fail; root collisions are
/// tallied but permitted.
FiberCheckReport fiber_real_root_check(const LinearSpace& l, int trials, std::uint64_t seed);

struct TransversalityReport {
    bool sign_compatible = false;
    BigRat pairing;
};

/// Sign-pattern test between the coordinates of the space and the dual
/// coordinates of the complementary input; when compatible, the transversal
/// pairing is asserted nonzero.
TransversalityReport stability_transversality(const LinearSpace& l, const RatMatrix& m_rows);

/// Exact complex-point criterion: true when 1/(a + i b) lies outside the
/// space, decided by a rank computation over Q(i). Requires b to be a
/// nonzero vector orthogonal to the space and a + i b coordinatewise
/// nonzero.
bool hyp_point_check(const LinearSpace& l, const std::vector<BigRat>& a,
                     const std::vector<BigRat>& b);

} // namespace recipchow
