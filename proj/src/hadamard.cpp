#include "recipchow/hadamard.hpp"

#include <random>

namespace recipchow {

MultiPoly bichow_form(int n, int d) { return forest_expansion(n, d, std::nullopt); }

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::string> x_vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// Per-vertex facet counts of the forest columns, offset by the minimum
// attained over all spanning forests.
Exps vertex_exponents(int n, int d, const SubsetTable& tcol,
                      const std::vector<std::size_t>& cols) {
    Exps deg(n, 0);
    for (std::size_t c : cols)
        for (int e : mask_to_elems(tcol.mask(c))) ++deg[e - 1];
    int base = static_cast<int>(binom(n - 2, d - 2));
    for (int i = 0; i < n; ++i) {
        deg[i] -= base;
        if (deg[i] < 0) throw internal_error("vertex count below the cone bound");
    }
    return deg;
}

} // namespace

MultiPoly hadamard_surface(const LinearSpace& l, const RatMatrix& m_rows) {
    const int n = l.n(), d = l.d();
    if (static_cast<int>(m_rows.cols()) != n || static_cast<int>(m_rows.rows()) != n - d)
        throw input_error("second space must have complementary dimension");
    if (!l.plucker().full_support())
        throw input_error("genericity failure: first space has a zero coordinate");
    Orthocomplement mp = orthocomplement(m_rows);
    if (!mp.plucker.full_support())
        throw input_error("genericity failure: second space has a zero dual coordinate");

    const SubsetTable& tcol = SubsetTable::get(n, d);
    const std::size_t m = tcol.size();
    MultiPoly out(x_vars(n));
    enumerate_spanning_forests(n, d, [&](const Forest& f) {
        BigRat coef{f.coefficient};
        std::vector<bool> in_forest(m, false);
        for (std::size_t c : f.cols) in_forest[c] = true;
        for (std::size_t c = 0; c < m; ++c)
            coef *= in_forest[c] ? mp.plucker.coeffs[c] : l.plucker().coeffs[c];
        out.add_term(vertex_exponents(n, d, tcol, f.cols), coef);
    });
    if (out.is_zero()) throw input_error("genericity failure: product is not a hypersurface");
    return out.normalized();
}

MultiPoly hadamard_symbolic(int n, int d) {
    const SubsetTable& tcol = SubsetTable::get(n, d);
    const std::size_t m = tcol.size();
    std::vector<std::string> vars;
    for (std::uint32_t msk : tcol.masks()) vars.push_back("a_" + subset_label(msk));
    for (std::uint32_t msk : tcol.masks()) vars.push_back("g_" + subset_label(msk));
    for (const auto& xv : x_vars(n)) vars.push_back(xv);
    MultiPoly out(vars);
    enumerate_spanning_forests(n, d, [&](const Forest& f) {
        Exps e(vars.size(), 0);
        std::vector<bool> in_forest(m, false);
        for (std::size_t c : f.cols) in_forest[c] = true;
        for (std::size_t c = 0; c < m; ++c) e[in_forest[c] ? m + c : c] = 1;
        Exps xe = vertex_exponents(n, d, tcol, f.cols);
        for (int i = 0; i < n; ++i) e[2 * m + i] = xe[i];
        out.add_term(e, BigRat(f.coefficient));
    });
    return out;
}

bool membership_check(const MultiPoly& poly, const LinearSpace& l, const RatMatrix& m_rows,
                      int trials, std::uint64_t seed) {
    const int n = l.n(), d = l.d();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    auto random_point = [&](const RatMatrix& rows) {
        std::vector<BigRat> p(n, BigRat(0));
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            BigRat c(coeff(rng));
            for (int j = 0; j < n; ++j) p[j] += c * rows.at(r, j);
        }
        return p;
    };
    for (int t = 0; t < trials; ++t) {
        std::vector<BigRat> a = random_point(l.mat());
        std::vector<BigRat> b = random_point(m_rows);
        std::vector<BigRat> prod(n);
        for (int j = 0; j < n; ++j) prod[j] = a[j] * b[j];
        if (!poly.evaluate(prod).is_zero()) return false;
    }
    if (trials > 0) {
        // A generic point should not vanish.
        for (int attempt = 0; attempt < 32; ++attempt) {
            std::vector<BigRat> p(n);
            for (int j = 0; j < n; ++j) p[j] = BigRat(coeff(rng));
            if (!poly.evaluate(p).is_zero()) return true;
        }
        return false;
    }
    (void)d;
    return true;
}

} // namespace recipchow
