#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recipchow/entropic.hpp"
#include "recipchow/reality.hpp"
#include "recipchow/rng.hpp"
#include "recipchow/unipoly.hpp"

#include "golden.hpp"
#include "test_util.hpp"

using namespace recipchow;
using rctest::mat;

namespace {

LinearSpace interp_space() { return LinearSpace(mat({{1, 1, 1, 1}, {0, 1, 2, 3}})); }

RatMatrix second_difference_frame() { return mat({{-1, 2, -1, 0}, {0, -1, 2, -1}}); }

EntropicData interp_data() { return mult_matrices(interp_space(), second_difference_frame()); }

} // namespace

TEST_CASE("pairing against the kernel wedge") {
    EntropicData data = interp_data();
    CHECK(data.gram == mat({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}));
    CHECK(data.kernel_basis == second_difference_frame());

    // The default reduced kernel basis spans the same space and gives the
    // same wedge, so the same matrix.
    EntropicData def = mult_matrices(interp_space());
    CHECK(def.gram == data.gram);
}

TEST_CASE("multiplication operators of the interpolation plane") {
    EntropicData data = interp_data();
    REQUIRE(data.mult.size() == 2);
    std::vector<std::string> yv = data.yvars;

    CHECK(data.mult[0].trace() ==
          rctest::h_linear(yv, "5/2", "23/6")); // y3 action
    CHECK(data.mult[1].trace() ==
          rctest::h_linear(yv, "5/2", "11/3")); // y4 action

    CHECK(data.mult[0] * data.mult[1] == data.mult[1] * data.mult[0]);
}

TEST_CASE("operators satisfy their characteristic polynomial") {
    EntropicData data = interp_data();
    const std::size_t k = data.vt.k;
    for (const PolyMatrix& m : data.mult) {
        // char poly in an added variable t, coefficients in y1, y2
        std::vector<std::string> tv{"y1", "y2", "t"};
        std::vector<MultiPoly> tmat(k * k, MultiPoly::zero(tv));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                for (const auto& [e, c] : m.at(i, j).terms())
                    tmat[i * k + j].add_term({e[0], e[1], 0}, -c);
                if (i == j) tmat[i * k + j].add_term({0, 0, 1}, BigRat(1));
            }
        MultiPoly chi = det_poly_matrix(tmat, k);
        // substitute t -> m and check the zero matrix comes out
        PolyMatrix acc(k, k, data.yvars);
        for (const auto& [e, c] : chi.terms()) {
            PolyMatrix term = PolyMatrix::identity(k, data.yvars);
            for (int32_t p = 0; p < e[2]; ++p) term = term * m;
            MultiPoly scalar = MultiPoly::monomial(data.yvars, {e[0], e[1]}, c);
            for (auto& entry : term.e) entry = entry * scalar;
            acc = acc + term;
        }
        for (const auto& entry : acc.e) CHECK(entry.is_zero());
    }
}

TEST_CASE("trace form of the interpolation plane") {
    EntropicData data = interp_data();
    TraceForm tf = trace_form_disc(data);
    REQUIRE(tf.h.rows == 3);
    std::vector<std::string> yv = data.yvars;

    CHECK(tf.h.at(0, 0) == MultiPoly::constant(yv, BigRat(3)));
    CHECK(tf.h.at(0, 1) == rctest::h_linear(yv, "5/2", "23/6"));
    CHECK(tf.h.at(0, 2) == rctest::h_linear(yv, "5/2", "11/3"));
    CHECK(tf.h.at(1, 1) == rctest::h_entry(yv, "15/4", "40/3", "583/36"));
    CHECK(tf.h.at(1, 2) == rctest::h_entry(yv, "5/2", "15/2", "317/36"));
    CHECK(tf.h.at(2, 2) == rctest::h_entry(yv, "15/4", "55/6", "179/18"));

    CHECK(tf.det_raw == rctest::entropic_quartic(yv, BigRat(25, 144)));
    CHECK(tf.det_normalized == rctest::entropic_quartic(yv, BigRat(1)));
}

TEST_CASE("trace form does not depend on the similarity route") {
    EntropicData data = interp_data();
    TraceForm tf = trace_form_disc(data);
    SosCertificate cert = sos_certificate(data, tf);
    REQUIRE(cert.mode == SosCertificate::Mode::exact);
    // Rebuild the form from the symmetrized operators.
    RatMatrix qinv = inverse(cert.q);
    RatMatrix ginv = inverse(data.gram);
    std::vector<PolyMatrix> sym;
    for (const PolyMatrix& psi : data.psi)
        sym.push_back(PolyMatrix::sandwich(qinv, psi.mul_rat(ginv), cert.q));
    PolyMatrix b3 = sym[0], b4 = sym[1];
    CHECK((b3 * b3).trace() == tf.h.at(1, 1));
    CHECK((b3 * b4).trace() == tf.h.at(1, 2));
    CHECK((b4 * b4).trace() == tf.h.at(2, 2));
}

TEST_CASE("exact certificate on the interpolation plane") {
    EntropicData data = interp_data();
    TraceForm tf = trace_form_disc(data);
    SosCertificate cert = sos_certificate(data, tf);
    REQUIRE(cert.mode == SosCertificate::Mode::exact);
    CHECK(cert.q * cert.q.transpose() == data.gram);

    MultiPoly total = MultiPoly::zero(data.yvars);
    for (const MultiPoly& q : cert.squares) total = total + q * q;
    CHECK(total == tf.det_raw);

    // Point check at (1, 0).
    BigRat at10 = tf.det_raw.evaluate({BigRat(1), BigRat(0)});
    CHECK(at10 == BigRat(25 * 45, 144));
    BigRat sq_sum(0);
    for (const MultiPoly& q : cert.squares) {
        BigRat v = q.evaluate({BigRat(1), BigRat(0)});
        sq_sum += v * v;
    }
    CHECK(sq_sum == at10);
}

TEST_CASE("one-dimensional space is trivial") {
    LinearSpace line(mat({{1, 2, 3}}));
    EntropicData data = mult_matrices(line);
    TraceForm tf = trace_form_disc(data);
    REQUIRE(tf.h.rows == 1);
    CHECK(tf.h.at(0, 0) == MultiPoly::constant(data.yvars, BigRat(1)));
    SosCertificate cert = sos_certificate(data, tf);
    CHECK(cert.mode == SosCertificate::Mode::exact);
    REQUIRE(cert.squares.size() == 1);
    CHECK(cert.squares[0] == MultiPoly::constant(data.yvars, BigRat(1)));
}

TEST_CASE("support and shape preconditions") {
    LinearSpace thin(mat({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
    CHECK_THROWS_WITH_AS(mult_matrices(thin), doctest::Contains("support"), input_error);

    LinearSpace l = interp_space();
    CHECK_THROWS_AS(mult_matrices(l, mat({{1, 0, 0, 0}, {0, 1, 0, 0}})), input_error);
    CHECK_THROWS_AS(disc_oracle_d2(LinearSpace(mat({{1, 2, 3}}))), input_error);
}

TEST_CASE("fiber discriminant oracle on the interpolation plane") {
    LinearSpace l = interp_space();
    MultiPoly oracle = disc_oracle_d2(l);
    CHECK(oracle == rctest::entropic_quartic({"y1", "y2"}, BigRat(1)));
    CHECK(oracle.total_degree() == 2 * l.n() - 4);
}

TEST_CASE("oracle degree and proportionality on random planes") {
    Rng rng(33550336);
    int done = 0;
    while (done < 8) {
        int n = static_cast<int>(rng.integer(4, 5));
        LinearSpace l = random_space(rng, 2, n);
        if (!l.plucker().full_support()) continue;
        EntropicData data = mult_matrices(l);
        TraceForm tf = trace_form_disc(data);
        MultiPoly oracle = disc_oracle_d2(l);
        CHECK(oracle.total_degree() == 2 * n - 4);
        // proportional with a positive rational constant
        BigRat ratio = tf.det_raw.leading_term().second / oracle.leading_term().second;
        CHECK(ratio.sign() > 0);
        CHECK(tf.det_raw == oracle.scaled(ratio));
        ++done;
    }
}

TEST_CASE("discriminant values stay nonnegative") {
    Rng rng(8128);
    int done = 0;
    while (done < 4) {
        int n = static_cast<int>(rng.integer(4, 5));
        LinearSpace l = random_space(rng, 2, n);
        if (!l.plucker().full_support()) continue;
        TraceForm tf = trace_form_disc(mult_matrices(l));
        for (int p = 0; p < 100; ++p) {
            BigRat v = tf.det_raw.evaluate({rng.rat(9, 4), rng.rat(9, 4)});
            CHECK(v.sign() >= 0);
        }
        ++done;
    }
}

TEST_CASE("floating certificate stays within tolerance") {
    Rng rng(496);
    int done = 0, floats = 0;
    while (done < 6) {
        LinearSpace l = random_space(rng, 2, 5);
        if (!l.plucker().full_support()) continue;
        EntropicData data = mult_matrices(l);
        TraceForm tf = trace_form_disc(data);
        SosCertificate cert = sos_certificate(data, tf, 1e-9);
        if (cert.mode == SosCertificate::Mode::floating) {
            ++floats;
            CHECK(cert.residual < 1e-9);
        } else {
            MultiPoly total = MultiPoly::zero(data.yvars);
            for (const MultiPoly& q : cert.squares) total = total + q * q;
            CHECK(total == tf.det_raw);
        }
        ++done;
    }
    // at least one instance should take each route over six draws
    CHECK(floats >= 1);
}

TEST_CASE("collapsed columns force a rational branch line") {
    // Columns one and two are parallel, so every fiber over the line
    // y2 = 2 y1 picks up the square of their common linear form. The
    // monomial basis of the trace form needs full support, so only the
    // fiber route applies here; it must see a real double root.
    LinearSpace l(mat({{1, 1, 1, 1}, {2, 2, 1, 3}}));
    CHECK(l.plucker().at_mask(elems_to_mask({1, 2}, 4)).is_zero());
    CHECK_FALSE(l.plucker().full_support());
    CHECK_THROWS_AS(disc_oracle_d2(l), input_error);

    std::vector<BigRat> f = fiber_form(l, BigRat(1), BigRat(2));
    UniPoly p(std::move(f));
    UniPoly g = UniPoly::gcd(p, p.derivative());
    CHECK(g.degree() >= 1); // double root at the collapsed column's root
    CHECK(g.eval(BigRat(-2)).is_zero());
    CHECK(fiber_status(l, BigRat(1), BigRat(2)) == FiberStatus::collision_all_real);

    // Off the branch line the fiber separates again.
    CHECK(fiber_status(l, BigRat(1), BigRat(3)) == FiberStatus::all_real_distinct);
}

TEST_CASE("full support keeps the discriminant strictly positive") {
    // Real full-support planes have strictly interlacing fiber pencils, so
    // no real branch points; spot-check strict positivity away from zero.
    Rng rng(1729);
    LinearSpace l = random_space(rng, 2, 4);
    while (!l.plucker().full_support()) l = random_space(rng, 2, 4);
    TraceForm tf = trace_form_disc(mult_matrices(l));
    for (int p = 0; p < 50; ++p) {
        BigRat y1 = rng.rat(9, 3), y2 = rng.rat(9, 3);
        if (y1.is_zero() && y2.is_zero()) continue;
        CHECK(tf.det_raw.evaluate({y1, y2}).sign() > 0);
    }
}
