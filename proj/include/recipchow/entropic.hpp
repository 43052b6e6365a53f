#pragma once

#include <optional>

#include "recipchow/detrep.hpp"

namespace recipchow {

/// Dense matrix of polynomials sharing one variable table.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<MultiPoly> e;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c, const std::vector<std::string>& vars)
        : rows(r), cols(c), e(r * c, MultiPoly::zero(vars)) {}
    static PolyMatrix identity(std::size_t k, const std::vector<std::string>& vars);

    MultiPoly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const MultiPoly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
    PolyMatrix mul_rat(const RatMatrix& m) const;              // this * m
    static PolyMatrix sandwich(const RatMatrix& q, const PolyMatrix& a, const RatMatrix& qt);
    MultiPoly trace() const;
    bool is_symmetric() const;

    RatMatrix evaluate(const std::vector<BigRat>& point) const;
};

/// Frame and multiplication operators of the coordinate ring of the
/// reciprocal variety as a free module over the projection coordinates.
struct EntropicData {
    RatMatrix space_basis;           // d x n, rows v_1..v_d
    RatMatrix kernel_basis;          // (n-d) x n, rows v_{d+1}..v_n
    VectorTable vt;
    RatMatrix gram;                  // pairing against the kernel wedge; positive definite
    std::vector<std::string> yvars;  // y1..yd
    std::vector<PolyMatrix> psi;     // symmetric numerators, linear in y
    std::vector<PolyMatrix> mult;    // mult[j] = psi[j] * gram^{-1}
};

/// Builds the commuting multiplication matrices for the coordinates past d.
/// Requires full coordinate support. A provided kernel basis must span the
/// orthogonal complement; the default is the reduced kernel basis. When the
/// pairing against the kernel wedge comes out negative definite the first
/// kernel row is negated so the Gram matrix is positive definite.
EntropicData mult_matrices(const LinearSpace& l,
                           const std::optional<RatMatrix>& kernel = std::nullopt);

struct TraceForm {
    std::vector<Exps> basis;  // monomial exponents over the n-d trailing coordinates
    PolyMatrix h;             // traces of products of basis operators
    MultiPoly det_raw;
    MultiPoly det_normalized; // content 1, positive leading coefficient
};

/// Trace form over the monomial basis of degree at most d-1 and its
/// determinant, the discriminant of the projection from the kernel frame.
TraceForm trace_form_disc(const EntropicData& data);

/// Polynomial with double coefficients; carrier for the floating
/// certificate mode.
struct DPoly {
    std::map<Exps, double, GrlexLess> terms;
    friend DPoly operator*(const DPoly& a, const DPoly& b);
    friend DPoly operator+(const DPoly& a, const DPoly& b);
    friend DPoly operator-(const DPoly& a, const DPoly& b);
    DPoly scaled(double c) const;
};

struct SosCertificate {
    enum class Mode { exact, floating };
    Mode mode = Mode::floating;
    std::string factor_route;             // how the factor of the Gram matrix was found
    RatMatrix q;                          // exact mode: Q with Q Q^T = gram
    std::vector<MultiPoly> squares;       // exact mode: det_raw = sum of their squares
    std::vector<DPoly> squares_float;     // floating mode
    double residual = 0.0;                // floating: relative coefficient residual
};

/// Sum-of-squares certificate for the trace-form determinant. Exact when a
/// rational factor Q Q^T of the Gram matrix is found (triangular route when
/// the diagonal of the LDL factorization consists of squares, otherwise a
/// bounded integer search); floating fallback uses a numeric Cholesky
/// factor and reports the coefficient residual against the tolerance.
/// allow_exact = false skips the rational factor search.
SosCertificate sos_certificate(const EntropicData& data, const TraceForm& tf,
                               double tolerance = 1e-9, bool allow_exact = true);

/// Independent route to the discriminant for plane projections (d = 2):
/// resultant of the two partial derivatives of the generic fiber binary
/// form, normalized to content 1 and positive leading coefficient. Equals
/// the trace-form determinant up to one positive rational constant.
MultiPoly disc_oracle_d2(const LinearSpace& l);

} // namespace recipchow
