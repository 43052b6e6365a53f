#include "recipchow/reality.hpp"

#include "recipchow/unipoly.hpp"

namespace recipchow {

std::vector<BigRat> fiber_form(const LinearSpace& l, const BigRat& y1, const BigRat& y2) {
    if (l.d() != 2) throw input_error("fiber forms need a plane");
    const int n = l.n();
    std::vector<BigRat> f(n, BigRat(0));
    for (int i = 0; i < n; ++i) {
        BigRat ci = y2 * l.mat().at(0, i) - y1 * l.mat().at(1, i);
        if (ci.is_zero()) continue;
        std::vector<BigRat> prod{BigRat(1)};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<BigRat> next(prod.size() + 1);
            for (std::size_t p = 0; p < prod.size(); ++p) {
                next[p + 1] += prod[p] * l.mat().at(0, j);
                next[p] += prod[p] * l.mat().at(1, j);
            }
            prod = std::move(next);
        }
        for (int p = 0; p < n; ++p) f[p] += ci * prod[p];
    }
    return f;
}

FiberStatus fiber_status(const LinearSpace& l, const BigRat& y1, const BigRat& y2) {
    std::vector<BigRat> f = fiber_form(l, y1, y2);
    UniPoly p(std::move(f));
    if (p.is_zero()) return FiberStatus::degenerate;
    const int full_degree = l.n() - 1;
    const int finite_degree = p.degree();
    const int infinity_mult = full_degree - finite_degree;

    UniPoly q = p.squarefree_part();
    bool squarefree = (q.degree() == finite_degree) && infinity_mult <= 1;
    int real_distinct = (q.degree() > 0) ? sturm_real_roots(q) : 0;
    if (real_distinct < q.degree()) return FiberStatus::nonreal;
    return squarefree ? FiberStatus::all_real_distinct : FiberStatus::collision_all_real;
}

FiberCheckReport fiber_real_root_check(const LinearSpace& l, int trials, std::uint64_t seed) {
    if (l.d() != 2) throw input_error("real-root fiber check needs a plane");
    FiberCheckReport rep;
    rep.seed = seed;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        FiberStatus st = FiberStatus::degenerate;
        for (int attempt = 0; attempt < 64 && st == FiberStatus::degenerate; ++attempt) {
            BigRat y1 = rng.rat(20, 5), y2 = rng.rat(20, 5);
            if (y1.is_zero() && y2.is_zero()) continue;
            st = fiber_status(l, y1, y2);
        }
        if (st == FiberStatus::degenerate)
            throw input_error("fiber form degenerates on every sample");
        ++rep.samples;
        if (st == FiberStatus::collision_all_real) ++rep.collisions;
        if (st == FiberStatus::nonreal) {
            rep.all_real = false;
            return rep;
        }
    }
    rep.all_real = true;
    return rep;
}

TransversalityReport stability_transversality(const LinearSpace& l, const RatMatrix& m_rows) {
    const int n = l.n(), d = l.d();
    if (static_cast<int>(m_rows.cols()) != n || static_cast<int>(m_rows.rows()) != n - d)
        throw input_error("second space must have complementary dimension");
    TransversalityReport rep;
    Orthocomplement mp = orthocomplement(m_rows);
    rep.pairing = pairing_transversal(l.plucker(), mp.plucker);

    int common_sign = 0;
    bool compatible = true;
    for (std::size_t r = 0; r < l.plucker().coeffs.size(); ++r) {
        int s = l.plucker().coeffs[r].sign() * mp.plucker.coeffs[r].sign();
        if (s == 0) continue;
        if (common_sign == 0) common_sign = s;
        else if (s != common_sign) { compatible = false; break; }
    }
    rep.sign_compatible = compatible && common_sign != 0;
    if (rep.sign_compatible && rep.pairing.is_zero())
        throw internal_error("sign-compatible pair with vanishing pairing");
    return rep;
}

bool hyp_point_check(const LinearSpace& l, const std::vector<BigRat>& a,
                     const std::vector<BigRat>& b) {
    const int n = l.n(), d = l.d();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw input_error("point has wrong dimension");
    bool b_zero = true;
    for (const auto& x : b)
        if (!x.is_zero()) { b_zero = false; break; }
    if (b_zero) throw input_error("imaginary direction must be nonzero");
    for (int i = 0; i < d; ++i) {
        BigRat dot(0);
        for (int j = 0; j < n; ++j) dot += l.mat().at(i, j) * b[j];
        if (!dot.is_zero())
            throw input_error("imaginary direction is not orthogonal to the space");
    }
    for (int j = 0; j < n; ++j)
        if (a[j].is_zero() && b[j].is_zero())
            throw input_error("test point has a zero coordinate");

    // z = a + i b; the point passes when 1/z does not lie in the row span.
    std::vector<std::vector<GaussianRat>> ext(d + 1, std::vector<GaussianRat>(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) ext[i][j] = GaussianRat(l.mat().at(i, j), BigRat(0));
    for (int j = 0; j < n; ++j) ext[d][j] = GaussianRat(a[j], b[j]).inverse();
    return rank_gaussian(std::move(ext)) == static_cast<std::size_t>(d) + 1;
}

} // namespace recipchow
