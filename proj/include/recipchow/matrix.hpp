#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recipchow/rational.hpp"

namespace recipchow {

/// Dense matrix over the rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRat> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigRat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigRat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;
    bool is_symmetric() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    RatMatrix scaled(const BigRat& c) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigRat> a_;
};

/// Dense matrix over the integers (GMP), row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix to_rational() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

/// Exact determinant. Fraction-free: rows are lifted to integers by their
/// denominator lcm and eliminated Bareiss-style, with the scale factor
/// tracked exactly.
BigRat det_exact(const RatMatrix& m);

/// Bareiss determinant of an integer matrix.
mpz_class det_bareiss(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... of an integer matrix, nonnegative,
/// padded with zeros up to min(rows, cols).
std::vector<mpz_class> smith_normal_form(IntMatrix m);

/// Row echelon data computed by Gauss-Jordan elimination.
struct RrefResult {
    RatMatrix mat;                   // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank = 0;
};

RrefResult rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one row per basis vector.
/// Rows are the reduced basis produced by back-substituting free columns.
RatMatrix kernel_basis(const RatMatrix& m);

/// Inverse of a nonsingular square matrix. Throws input_error otherwise.
RatMatrix inverse(const RatMatrix& m);

/// Solves m x = rhs for square nonsingular m (rhs may have several columns).
RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs);

struct LdlResult {
    bool ok = false;
    RatMatrix l;          // unit lower triangular
    RatMatrix d;          // diagonal
    std::size_t failed_at = 0;       // pivot index of the zero leading minor when !ok
    std::vector<bool> d_is_square;   // per pivot: D entry is a rational square
    std::vector<BigRat> d_sqrt;      // its square root where defined
};

/// LDL^T of a symmetric matrix without pivoting; fails (ok = false) at the
/// first zero pivot, which callers treat as a signal to fall back.
LdlResult ldl_decompose(const RatMatrix& g);

/// All leading principal minors strictly positive.
bool is_positive_definite(const RatMatrix& g);

/// Rank over Q(i); used for exact complex point-membership tests.
std::size_t rank_gaussian(std::vector<std::vector<GaussianRat>> m);

} // namespace recipchow
