#include "recipchow/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace recipchow {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<BigRat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw input_error("matrix entry count does not match dimensions");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigRat(1);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    RatMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matrix product dimension mismatch");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigRat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("matrix sum dimension mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("matrix difference dimension mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

RatMatrix RatMatrix::scaled(const BigRat& c) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

RatMatrix IntMatrix::to_rational() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = BigRat(at(i, j));
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw input_error("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool IntMatrix::is_zero() const {
    for (const auto& z : a_)
        if (z != 0) return false;
    return true;
}

mpz_class det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

BigRat det_exact(const RatMatrix& m) {
    if (!m.is_square()) throw input_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return BigRat(1);
    // Lift each row to integers by its denominator lcm; track total scale.
    IntMatrix z(n, n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const BigRat& r = m.at(i, j);
            z.at(i, j) = r.num() * (l / r.den());
        }
        scale *= l;
    }
    mpq_class d(det_bareiss(z), scale);
    d.canonicalize();
    return BigRat(d);
}

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t k = std::min(r, c);
    std::vector<mpz_class> inv(k, 0);
    std::size_t t = 0;
    while (t < k) {
        // Find a nonzero pivot in the lower-right block.
        std::size_t pi = t, pj = t;
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (m.at(i, j) != 0) {
                    mpz_class v = abs(m.at(i, j));
                    if (!found || v < best) { best = v; pi = i; pj = j; found = true; }
                }
        if (!found) break;
        for (std::size_t j = 0; j < c; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < r; ++i) std::swap(m.at(i, t), m.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                mpz_class q = m.at(i, t) / m.at(t, t); // truncated division
                for (std::size_t j = t; j < c; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    // Remainder is smaller than the pivot; swap it up and restart.
                    for (std::size_t j = t; j < c; ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (m.at(t, j) == 0) continue;
                mpz_class q = m.at(t, j) / m.at(t, t);
                for (std::size_t i = t; i < r; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (std::size_t i = t; i < r; ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
        }
        // Enforce divisibility of the remaining block by the pivot.
        bool redo = false;
        for (std::size_t i = t + 1; i < r && !redo; ++i)
            for (std::size_t j = t + 1; j < c && !redo; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (std::size_t jj = t; jj < c; ++jj) m.at(t, jj) += m.at(i, jj);
                    redo = true;
                }
        if (redo) continue;
        inv[t] = abs(m.at(t, t));
        ++t;
    }
    return inv;
}

RrefResult rref(RatMatrix m) {
    RrefResult res;
    const std::size_t r = m.rows(), c = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m.at(p, col).is_zero()) ++p;
        if (p == r) continue;
        if (p != row)
            for (std::size_t j = 0; j < c; ++j) std::swap(m.at(row, j), m.at(p, j));
        BigRat inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < c; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            BigRat f = m.at(i, col);
            for (std::size_t j = col; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    res.mat = std::move(m);
    return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t c = m.cols();
    std::vector<bool> is_pivot(c, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < c; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMatrix k(free_cols.size(), c);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        k.at(f, fc) = BigRat(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            k.at(f, r.pivots[i]) = -r.mat.at(i, fc);
    }
    return k;
}

RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs) {
    if (!m.is_square() || m.rows() != rhs.rows())
        throw input_error("solve: dimension mismatch");
    const std::size_t n = m.rows(), w = rhs.cols();
    RatMatrix aug(n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < w; ++j) aug.at(i, n + j) = rhs.at(i, j);
    }
    RrefResult r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] >= n) throw input_error("solve: singular matrix");
    RatMatrix x(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j) x.at(i, j) = r.mat.at(i, n + j);
    return x;
}

RatMatrix inverse(const RatMatrix& m) { return solve(m, RatMatrix::identity(m.rows())); }

LdlResult ldl_decompose(const RatMatrix& g) {
    if (!g.is_symmetric()) throw input_error("ldl: matrix not symmetric");
    const std::size_t n = g.rows();
    LdlResult res;
    res.l = RatMatrix::identity(n);
    res.d = RatMatrix(n, n);
    RatMatrix a = g;
    for (std::size_t k = 0; k < n; ++k) {
        BigRat piv = a.at(k, k);
        if (piv.is_zero() && k + 1 < n) {
            bool rest_zero = true;
            for (std::size_t i = k; i < n && rest_zero; ++i)
                for (std::size_t j = k; j < n && rest_zero; ++j)
                    if (!a.at(i, j).is_zero()) rest_zero = false;
            if (rest_zero) { // trailing zero block factors trivially
                for (std::size_t i = k; i < n; ++i) {
                    res.d_is_square.push_back(true);
                    res.d_sqrt.push_back(BigRat(0));
                }
                res.ok = true;
                return res;
            }
            res.failed_at = k;
            return res; // zero leading minor, pivoting failure
        }
        res.d.at(k, k) = piv;
        BigRat sq;
        bool isq = piv.square_root(&sq);
        res.d_is_square.push_back(isq);
        res.d_sqrt.push_back(isq ? sq : BigRat(0));
        if (piv.is_zero()) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            BigRat f = a.at(i, k) / piv;
            res.l.at(i, k) = f;
            for (std::size_t j = k + 1; j <= i; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                a.at(j, i) = a.at(i, j);
            }
        }
    }
    res.ok = true;
    return res;
}

bool is_positive_definite(const RatMatrix& g) {
    LdlResult r = ldl_decompose(g);
    if (!r.ok) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (r.d.at(i, i).sign() <= 0) return false;
    return true;
}

std::size_t rank_gaussian(std::vector<std::vector<GaussianRat>> m) {
    if (m.empty()) return 0;
    const std::size_t r = m.size(), c = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m[p][col].is_zero()) ++p;
        if (p == r) continue;
        std::swap(m[row], m[p]);
        GaussianRat inv = m[row][col].inverse();
        for (std::size_t j = col; j < c; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = row + 1; i < r; ++i) {
            if (m[i][col].is_zero()) continue;
            GaussianRat f = m[i][col];
            for (std::size_t j = col; j < c; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
    }
    return row;
}

} // namespace recipchow
