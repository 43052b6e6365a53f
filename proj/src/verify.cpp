#include "recipchow/verify.hpp"

#include <sstream>

#include "recipchow/unipoly.hpp"

namespace recipchow {

std::optional<std::vector<BigRat>> reciprocal_torus_point(const LinearSpace& l, Rng& rng) {
    const int n = l.n(), d = l.d();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<BigRat> x(n, BigRat(0));
        for (int i = 0; i < d; ++i) {
            BigRat c(rng.nonzero(9));
            for (int j = 0; j < n; ++j) x[j] += c * l.mat().at(i, j);
        }
        bool torus = true;
        for (const auto& xi : x)
            if (xi.is_zero()) { torus = false; break; }
        if (!torus) continue;
        for (auto& xi : x) xi = xi.inverse();
        return x;
    }
    return std::nullopt;
}

std::vector<BigRat> random_wedge_coeffs(int n, int k, Rng& rng) {
    const SubsetTable& t = SubsetTable::get(n, k);
    std::vector<BigRat> c(t.size());
    for (auto& v : c) v = BigRat(rng.integer(-5, 5));
    return c;
}

namespace {

SuiteResult suite_degree(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int checked = 0;
    for (int t = 0; t < trials; ++t) {
        int d = static_cast<int>(rng.integer(2, 5));
        int n = static_cast<int>(rng.integer(d + 1, 7));
        LinearSpace l = random_space(rng, d, n, t % 2 == 1);
        // v_vectors cross-checks the dimension against the facet count.
        VectorTable vt = v_vectors(l.matroid());
        auto [facets, deg] = bcc_facets_degree(l.matroid());
        if (vt.k != deg) return {"degree", false, "dimension mismatch"};
        basis_order_check(l.matroid());
        ++checked;
    }
    return {"degree", true, std::to_string(checked) + " spaces"};
}

SuiteResult suite_witness(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        int d = static_cast<int>(rng.integer(2, 4));
        int n = static_cast<int>(rng.integer(d + 1, 6));
        LinearSpace l = random_space(rng, d, n, done % 3 == 2);
        auto w = reciprocal_torus_point(l, rng);
        if (!w) continue;
        std::vector<BigRat> delta = random_wedge_coeffs(n, n - d - 1, rng);
        if (!kernel_witness_check(l, *w, delta))
            return {"witness", false, "annihilation failed"};
        ++done;
    }
    return {"witness", true, std::to_string(done) + " witnesses"};
}

SuiteResult suite_oracle(std::uint64_t seed, int scale) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> cases{{2, 4}, {2, 5}, {3, 4}, {3, 5}};
    if (scale > 1) cases.insert(cases.end(), {{2, 6}, {3, 6}});
    for (auto [d, n] : cases) {
        const SubsetTable& t = SubsetTable::get(n, d);
        std::vector<BigRat> alpha(t.size());
        for (auto& a : alpha) a = rng.nonzero_rat(9, 3);
        MultiPoly expansion = forest_expansion(n, d, alpha);

        // Determinant route with the same numeric coordinates.
        MultiPoly det = det_symlin(phi_uniform_values(n, d, alpha));
        BigRat prod(1);
        for (const auto& a : alpha) prod *= a;
        if (det.scaled(prod) != expansion)
            return {"oracle", false, "mismatch at d=" + std::to_string(d) +
                                         " n=" + std::to_string(n)};
    }
    return {"oracle", true, std::to_string(cases.size()) + " uniform cases"};
}

SuiteResult suite_resultant(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        int n = static_cast<int>(rng.integer(3, 6));
        RatMatrix a = random_matrix(rng, 2, n, 6);
        try {
            LinearSpace la(a);
            if (!la.plucker().full_support()) continue;
        } catch (const input_error&) {
            continue;
        }
        RatMatrix c = random_matrix(rng, 2, n, 6);
        BigRat tree = tree_resultant(a, c);
        // Binary forms represented by the two c rows.
        std::vector<std::vector<BigRat>> forms(2, std::vector<BigRat>(n, BigRat(0)));
        for (int row = 0; row < 2; ++row)
            for (int i = 0; i < n; ++i) {
                std::vector<BigRat> prod{BigRat(1)};
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    std::vector<BigRat> next(prod.size() + 1);
                    for (std::size_t p = 0; p < prod.size(); ++p) {
                        next[p + 1] += prod[p] * a.at(0, j);
                        next[p] += prod[p] * a.at(1, j);
                    }
                    prod = std::move(next);
                }
                for (int p = 0; p < n; ++p) forms[row][p] += c.at(row, i) * prod[p];
            }
        BigRat syl = sylvester_resultant(forms[0], forms[1]);
        if (tree.is_zero() != syl.is_zero())
            return {"resultant", false, "vanishing disagreement"};
        ++done;
    }
    return {"resultant", true, std::to_string(done) + " instances"};
}

SuiteResult suite_hadamard(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        int n = static_cast<int>(rng.integer(4, 5));
        int d = 2;
        LinearSpace l = random_space(rng, d, n);
        if (!l.plucker().full_support()) continue;
        RatMatrix m = random_matrix(rng, static_cast<std::size_t>(n - d), n, 9);
        MultiPoly surf;
        try {
            surf = hadamard_surface(l, m);
        } catch (const input_error&) {
            continue;
        }
        if (surf.total_degree() != n - 2) // C(n-2, d-1) with d = 2
            return {"hadamard", false, "wrong degree"};
        if (!membership_check(surf, l, m, 20, rng.integer(1, 1 << 30)))
            return {"hadamard", false, "membership failed"};
        ++done;
    }
    return {"hadamard", true, std::to_string(done) + " pairs"};
}

SuiteResult suite_reality(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        int n = static_cast<int>(rng.integer(4, 6));
        LinearSpace l = random_space(rng, 2, n);
        FiberCheckReport rep = fiber_real_root_check(l, 20, rng.integer(1, 1 << 30));
        if (!rep.all_real) return {"reality", false, "nonreal fiber root"};

        Orthocomplement oc = orthocomplement(l.mat());
        std::vector<BigRat> a(n), b(n);
        for (int j = 0; j < n; ++j) a[j] = rng.rat(9, 3);
        for (std::size_t j = 0; j < oc.mat.cols(); ++j) b[j] = oc.mat.at(0, j);
        try {
            if (!hyp_point_check(l, a, b))
                return {"reality", false, "complex point criterion failed"};
        } catch (const input_error&) {
            // zero coordinate in the sampled point; skip
        }
        TransversalityReport tr = stability_transversality(l, oc.mat);
        if (!tr.sign_compatible || tr.pairing.is_zero())
            return {"reality", false, "self-pairing degenerate"};
        ++done;
    }
    return {"reality", true, std::to_string(done) + " spaces"};
}

SuiteResult suite_sos(std::uint64_t seed, int trials) {
    Rng rng(seed);
    int done = 0;
    while (done < trials) {
        int n = static_cast<int>(rng.integer(4, 5));
        LinearSpace l = random_space(rng, 2, n);
        if (!l.plucker().full_support()) continue;
        EntropicData data = mult_matrices(l);
        TraceForm tf = trace_form_disc(data);
        for (int p = 0; p < 50; ++p) {
            std::vector<BigRat> y{rng.rat(9, 3), rng.rat(9, 3)};
            if (tf.det_raw.evaluate(y).sign() < 0)
                return {"sos", false, "negative discriminant value"};
        }
        MultiPoly oracle = disc_oracle_d2(l);
        if (tf.det_normalized != oracle.normalized())
            return {"sos", false, "plane-projection oracle disagrees"};
        SosCertificate cert = sos_certificate(data, tf, 1e-9);
        if (cert.mode == SosCertificate::Mode::floating && !(cert.residual < 1e-9))
            return {"sos", false, "floating residual too large"};
        ++done;
    }
    return {"sos", true, std::to_string(done) + " spaces"};
}

} // namespace

std::vector<SuiteResult> run_verify_suites(const std::string& which, std::uint64_t seed,
                                           int scale) {
    std::vector<SuiteResult> out;
    auto want = [&](const std::string& name) { return which == "all" || which == name; };
    bool any = false;
    if (want("degree")) { out.push_back(suite_degree(seed + 1, 20 * scale)); any = true; }
    if (want("witness")) { out.push_back(suite_witness(seed + 2, 15 * scale)); any = true; }
    if (want("oracle")) { out.push_back(suite_oracle(seed + 3, scale)); any = true; }
    if (want("resultant")) { out.push_back(suite_resultant(seed + 4, 25 * scale)); any = true; }
    if (want("hadamard")) { out.push_back(suite_hadamard(seed + 5, 4 * scale)); any = true; }
    if (want("reality")) { out.push_back(suite_reality(seed + 6, 4 * scale)); any = true; }
    if (want("sos")) { out.push_back(suite_sos(seed + 7, 3 * scale)); any = true; }
    if (!any) throw input_error("unknown suite: " + which);
    return out;
}

} // namespace recipchow
