#include "recipchow/rng.hpp"

namespace recipchow {

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = BigRat(rng.integer(-bound, bound));
    return m;
}

LinearSpace random_space(Rng& rng, int d, int n, bool structured) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        RatMatrix m = random_matrix(rng, d, n, 9);
        if (structured && rng.integer(0, 1) == 1) {
            // Duplicate a column up to scale, forcing zero coordinates.
            int copies = static_cast<int>(rng.integer(1, 2));
            for (int c = 0; c < copies; ++c) {
                std::size_t src = static_cast<std::size_t>(rng.integer(0, n - 1));
                std::size_t dst = static_cast<std::size_t>(rng.integer(0, n - 1));
                if (src == dst) continue;
                BigRat scale(rng.nonzero(3));
                for (int i = 0; i < d; ++i) m.at(i, dst) = m.at(i, src) * scale;
            }
        }
        try {
            return LinearSpace(std::move(m));
        } catch (const input_error&) {
            continue; // rank deficient or a loop; draw again
        }
    }
    throw internal_error("failed to sample a valid space");
}

} // namespace recipchow
