#pragma once

#include <cstdint>
#include <random>

#include "recipchow/detrep.hpp"

namespace recipchow {

/// Seeded sampling helpers; every randomized routine takes an explicit seed
/// so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(g_);
    }
    long nonzero(long bound) {
        long v = 0;
        while (v == 0) v = integer(-bound, bound);
        return v;
    }
    BigRat rat(long num_bound, long den_bound) {
        return BigRat(integer(-num_bound, num_bound), integer(1, den_bound));
    }
    BigRat nonzero_rat(long num_bound, long den_bound) {
        return BigRat(nonzero(num_bound), integer(1, den_bound));
    }
    std::mt19937_64& raw() { return g_; }

private:
    std::mt19937_64 g_;
};

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

/// Random d x n rational space with no loops. With structured = true, some
/// samples get proportional column pairs so that zero coordinates appear.
LinearSpace random_space(Rng& rng, int d, int n, bool structured = false);

} // namespace recipchow
