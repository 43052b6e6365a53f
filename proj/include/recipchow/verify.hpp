#pragma once

#include <optional>
#include <string>

#include "recipchow/entropic.hpp"
#include "recipchow/hadamard.hpp"
#include "recipchow/reality.hpp"

namespace recipchow {

/// Point of the reciprocal variety with no zero coordinate: samples x in the
/// row span until all coordinates are nonzero and returns 1/x coordinatewise.
std::optional<std::vector<BigRat>> reciprocal_torus_point(const LinearSpace& l, Rng& rng);

/// Random coefficient vector over the (n-d-1)-subsets.
std::vector<BigRat> random_wedge_coeffs(int n, int k, Rng& rng);

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Bundled randomized self-checks. which is a suite name or "all"; scale
/// multiplies the default trial counts (scale = 1 keeps them CLI-sized).
std::vector<SuiteResult> run_verify_suites(const std::string& which, std::uint64_t seed,
                                           int scale = 1);

} // namespace recipchow
