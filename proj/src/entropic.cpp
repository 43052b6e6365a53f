#include "recipchow/entropic.hpp"

#include <algorithm>
#include <cmath>

#include "recipchow/parallel.hpp"

namespace recipchow {

PolyMatrix PolyMatrix::identity(std::size_t k, const std::vector<std::string>& vars) {
    PolyMatrix m(k, k, vars);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = MultiPoly::constant(vars, BigRat(1));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw input_error("matrix product dimension mismatch");
    PolyMatrix c(a.rows, b.cols, a.e.front().vars());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const MultiPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
            }
        }
    return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw input_error("matrix sum dimension mismatch");
    PolyMatrix c(a.rows, a.cols, a.e.front().vars());
    for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

PolyMatrix PolyMatrix::mul_rat(const RatMatrix& m) const {
    if (cols != m.rows()) throw input_error("matrix product dimension mismatch");
    PolyMatrix c(rows, m.cols(), e.front().vars());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const MultiPoly& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m.at(k, j).is_zero()) continue;
                c.at(i, j) = c.at(i, j) + aik.scaled(m.at(k, j));
            }
        }
    return c;
}

PolyMatrix PolyMatrix::sandwich(const RatMatrix& q, const PolyMatrix& a, const RatMatrix& qt) {
    PolyMatrix left(q.rows(), a.cols, a.e.front().vars());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t k = 0; k < q.cols(); ++k) {
            if (q.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.cols; ++j)
                left.at(i, j) = left.at(i, j) + a.at(k, j).scaled(q.at(i, k));
        }
    return left.mul_rat(qt);
}

MultiPoly PolyMatrix::trace() const {
    MultiPoly t = MultiPoly::zero(e.front().vars());
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) t = t + at(i, i);
    return t;
}

bool PolyMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix PolyMatrix::evaluate(const std::vector<BigRat>& point) const {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

namespace {

RatMatrix phi_wedge(const LinearSpace& l, const std::vector<BigRat>& beta) {
    return phi_at(l, functional_from_wedge(l.n(), l.d(), beta));
}

std::vector<std::string> y_variables(int d) {
    std::vector<std::string> v;
    for (int i = 1; i <= d; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

RatMatrix drop_row(const RatMatrix& m, std::size_t r) {
    RatMatrix out(m.rows() - 1, m.cols());
    for (std::size_t i = 0, o = 0; i < m.rows(); ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(o, j) = m.at(i, j);
        ++o;
    }
    return out;
}

} // namespace

EntropicData mult_matrices(const LinearSpace& l, const std::optional<RatMatrix>& kernel) {
    const int n = l.n(), d = l.d();
    if (d < 1) throw input_error("space dimension must be at least one");
    if (!l.plucker().full_support()) {
        for (std::size_t r = 0; r < l.plucker().coeffs.size(); ++r)
            if (l.plucker().coeffs[r].is_zero())
                throw input_error("coordinate support is not full: zero at " +
                                  subset_label(SubsetTable::get(n, d).mask(r)));
    }

    EntropicData data;
    data.space_basis = l.mat();
    if (kernel) {
        if (kernel->rows() != static_cast<std::size_t>(n - d) ||
            kernel->cols() != static_cast<std::size_t>(n))
            throw input_error("kernel basis has wrong shape");
        RatMatrix prod = l.mat() * kernel->transpose();
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                if (!prod.at(i, j).is_zero())
                    throw input_error("kernel basis is not orthogonal to the space");
        if (rank(*kernel) != static_cast<std::size_t>(n - d))
            throw input_error("kernel basis is rank deficient");
        data.kernel_basis = *kernel;
    } else {
        data.kernel_basis = orthocomplement(l.mat()).mat;
    }

    data.vt = v_vectors(l.matroid());
    data.yvars = y_variables(d);

    PlueckerVector q = pluecker_from_matrix(data.kernel_basis);
    data.gram = phi_wedge(l, q.coeffs);
    if (data.gram.at(0, 0).sign() < 0) {
        // Negative definite orientation: flip one kernel row.
        for (int j = 0; j < n; ++j) data.kernel_basis.at(0, j) = -data.kernel_basis.at(0, j);
        q = pluecker_from_matrix(data.kernel_basis);
        data.gram = phi_wedge(l, q.coeffs);
    }
    if (!is_positive_definite(data.gram))
        throw input_error("pairing against the kernel wedge is not definite");
    RatMatrix ginv = inverse(data.gram);

    const std::size_t k = data.vt.k;
    for (int j = d + 1; j <= n; ++j) {
        RatMatrix sub = drop_row(data.kernel_basis, static_cast<std::size_t>(j - d - 1));
        std::vector<BigRat> wj;
        if (sub.rows() == 0) {
            wj.assign(1, BigRat(1)); // empty wedge
        } else {
            wj = pluecker_from_matrix(sub).coeffs;
        }
        PolyMatrix psi(k, k, data.yvars);
        for (int i = 1; i <= d; ++i) {
            std::vector<BigRat> vi(n);
            for (int c = 0; c < n; ++c) vi[c] = l.mat().at(i - 1, c);
            RatMatrix coef = phi_wedge(l, wedge_with_vector(n, n - d - 1, wj, vi));
            int sgn = ((n - j - 1) % 2 == 0) ? 1 : -1;
            Exps e(data.yvars.size(), 0);
            e[i - 1] = 1;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c) {
                    BigRat v = coef.at(r, c);
                    if (sgn < 0) v = -v;
                    psi.at(r, c).add_term(e, v);
                }
        }
        if (!psi.is_symmetric()) throw internal_error("multiplication numerator not symmetric");
        data.psi.push_back(psi);
        data.mult.push_back(psi.mul_rat(ginv));
    }

    for (std::size_t a = 0; a < data.mult.size(); ++a)
        for (std::size_t b = a + 1; b < data.mult.size(); ++b)
            if (!(data.mult[a] * data.mult[b] == data.mult[b] * data.mult[a]))
                throw internal_error("multiplication matrices do not commute");
    return data;
}

namespace {

// Monomial exponents over m variables with total degree <= dmax, sorted by
// degree then descending lexicographically, so y_{d+1} powers come first.
std::vector<Exps> monomial_basis(int m, int dmax) {
    std::vector<Exps> out;
    Exps cur(m, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) {
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, dmax);
    std::stable_sort(out.begin(), out.end(), [](const Exps& a, const Exps& b) {
        int da = 0, db = 0;
        for (int32_t x : a) da += x;
        for (int32_t x : b) db += x;
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

// Products of the multiplication operators indexed by the basis monomials.
std::vector<PolyMatrix> basis_operators(const std::vector<PolyMatrix>& mult,
                                        const std::vector<Exps>& basis,
                                        const std::vector<std::string>& yvars,
                                        std::size_t k) {
    std::map<Exps, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::vector<PolyMatrix> ops(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Exps& e = basis[i];
        bool is_one = std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
        if (is_one) {
            ops[i] = PolyMatrix::identity(k, yvars);
            continue;
        }
        std::size_t j = 0;
        while (e[j] == 0) ++j;
        Exps prev = e;
        --prev[j];
        ops[i] = mult[j] * ops[pos.at(prev)];
    }
    return ops;
}

MultiPoly trace_of_product(const PolyMatrix& a, const PolyMatrix& b) {
    MultiPoly t = MultiPoly::zero(a.e.front().vars());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero() || b.at(j, i).is_zero()) continue;
            t = t + a.at(i, j) * b.at(j, i);
        }
    return t;
}

} // namespace

TraceForm trace_form_disc(const EntropicData& data) {
    const int d = static_cast<int>(data.space_basis.rows());
    const int n = static_cast<int>(data.space_basis.cols());
    const std::size_t k = data.vt.k;
    TraceForm tf;
    tf.basis = monomial_basis(n - d, d - 1);
    if (tf.basis.size() != k)
        throw internal_error("monomial basis size differs from the representation size");
    std::vector<PolyMatrix> ops = basis_operators(data.mult, tf.basis, data.yvars, k);
    tf.h = PolyMatrix(k, k, data.yvars);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) pairs.emplace_back(a, b);
    parallel_for(pairs.size(), [&](std::size_t i) {
        auto [a, b] = pairs[i];
        MultiPoly t = trace_of_product(ops[a], ops[b]);
        tf.h.at(a, b) = t;
        if (a != b) tf.h.at(b, a) = t;
    });
    tf.det_raw = det_poly_matrix(tf.h.e, k);
    tf.det_normalized = tf.det_raw.is_zero() ? tf.det_raw : tf.det_raw.normalized();
    return tf;
}

namespace {

// Bounded search for an integer matrix X with X X^T = G; rows are built
// depth first with running norm and inner-product constraints.
bool sphere_factor(const IntMatrix& g, std::size_t budget, std::vector<std::vector<long>>* out) {
    const std::size_t k = g.rows();
    std::vector<std::vector<long>> rows;
    std::size_t nodes = 0;

    auto row_search = [&](auto&& self, std::size_t r) -> bool {
        if (r == k) return true;
        // Candidate row: entries x_0..x_{k-1}, sum of squares = g(r,r),
        // dot with earlier rows fixed.
        std::vector<long> x(k, 0);
        mpz_class target = g.at(r, r);
        if (target < 0) return false;
        auto entry = [&](auto&& eself, std::size_t pos, mpz_class left) -> bool {
            if (++nodes > budget) return false;
            if (pos == k) {
                if (left != 0) return false;
                for (std::size_t p = 0; p < r; ++p) {
                    mpz_class dot = 0;
                    for (std::size_t c = 0; c < k; ++c) dot += mpz_class(rows[p][c]) * x[c];
                    if (dot != g.at(r, p)) return false;
                }
                rows.push_back(x);
                if (self(self, r + 1)) return true;
                rows.pop_back();
                return false;
            }
            long bound = static_cast<long>(std::sqrt(left.get_d()) + 1.0);
            for (long v = -bound; v <= bound; ++v) {
                mpz_class sq = mpz_class(v) * v;
                if (sq > left) continue;
                x[pos] = v;
                if (eself(eself, pos + 1, left - sq)) return true;
            }
            x[pos] = 0;
            return false;
        };
        return entry(entry, 0, target);
    };
    if (!row_search(row_search, 0)) return false;
    *out = rows;
    return true;
}

std::optional<RatMatrix> rational_gram_factor(const RatMatrix& g, std::string* route) {
    const std::size_t k = g.rows();
    LdlResult ldl = ldl_decompose(g);
    if (ldl.ok) {
        bool all_square = true;
        for (std::size_t i = 0; i < k; ++i)
            if (!ldl.d_is_square[i]) { all_square = false; break; }
        if (all_square) {
            RatMatrix q(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j <= i; ++j) q.at(i, j) = ldl.l.at(i, j) * ldl.d_sqrt[j];
            *route = "triangular";
            return q;
        }
    }
    // Clear denominators by a square and search for an integer factor.
    mpz_class l = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.at(i, j).den().get_mpz_t());
    for (long m = 1; m <= 4; ++m) {
        mpz_class scale = l * m;
        IntMatrix gi(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                BigRat v = g.at(i, j) * BigRat(mpz_class(scale * scale));
                if (!v.is_integer()) throw internal_error("scaled matrix not integral");
                gi.at(i, j) = v.num();
            }
        std::vector<std::vector<long>> rows;
        if (sphere_factor(gi, 2'000'000, &rows)) {
            RatMatrix q(k, k);
            BigRat inv = BigRat(scale).inverse();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) q.at(i, j) = BigRat(rows[i][j]) * inv;
            *route = "integer-sphere(m=" + std::to_string(m) + ")";
            return q;
        }
    }
    return std::nullopt;
}

DPoly to_dpoly(const MultiPoly& p) {
    DPoly d;
    for (const auto& [e, c] : p.terms()) d.terms[e] = c.to_double();
    return d;
}

DPoly dpoly_det(const std::vector<DPoly>& m, std::size_t k) {
    if (k == 1) return m[0];
    DPoly det;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<DPoly> sub;
        sub.reserve((k - 1) * (k - 1));
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) sub.push_back(m[i * k + j]);
        DPoly term = m[c] * dpoly_det(sub, k - 1);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < m - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

DPoly operator*(const DPoly& a, const DPoly& b) {
    DPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.terms[e] += ca * cb;
        }
    return r;
}

DPoly operator+(const DPoly& a, const DPoly& b) {
    DPoly r = a;
    for (const auto& [e, c] : b.terms) r.terms[e] += c;
    return r;
}

DPoly operator-(const DPoly& a, const DPoly& b) {
    DPoly r = a;
    for (const auto& [e, c] : b.terms) r.terms[e] -= c;
    return r;
}

DPoly DPoly::scaled(double c) const {
    DPoly r = *this;
    for (auto& [e, v] : r.terms) v *= c;
    return r;
}

SosCertificate sos_certificate(const EntropicData& data, const TraceForm& tf, double tolerance,
                               bool allow_exact) {
    const std::size_t k = data.vt.k;
    SosCertificate cert;

    if (k == 1 && allow_exact) {
        // The only basis operator is the identity, so the certificate does
        // not involve the Gram factor at all.
        cert.mode = SosCertificate::Mode::exact;
        cert.factor_route = "rank-one";
        cert.q = RatMatrix::identity(0);
        cert.squares.push_back(MultiPoly::constant(data.yvars, BigRat(1)));
        if (!(tf.det_raw == MultiPoly::constant(data.yvars, BigRat(1))))
            throw internal_error("rank-one trace form is not the constant one");
        return cert;
    }

    std::string route;
    std::optional<RatMatrix> q =
        allow_exact ? rational_gram_factor(data.gram, &route) : std::nullopt;
    if (q) {
        cert.mode = SosCertificate::Mode::exact;
        cert.factor_route = route;
        cert.q = *q;
        RatMatrix qinv = inverse(*q);
        RatMatrix ginv = inverse(data.gram);
        std::vector<PolyMatrix> sym;
        for (const PolyMatrix& psi : data.psi) {
            // A = Q^{-1} M Q with M = psi * gram^{-1}; symmetric by construction.
            PolyMatrix a = PolyMatrix::sandwich(qinv, psi.mul_rat(ginv), *q);
            if (!a.is_symmetric()) throw internal_error("conjugated operator not symmetric");
            sym.push_back(a);
        }
        std::vector<PolyMatrix> ops = basis_operators(sym, tf.basis, data.yvars, k);
        // Flatten the operators into rows; squares of the maximal minors sum
        // to the determinant of the trace form.
        std::vector<MultiPoly> u;
        u.reserve(k * k * k);
        for (const PolyMatrix& b : ops)
            for (const MultiPoly& p : b.e) u.push_back(p);
        const std::size_t m = k * k;
        MultiPoly total = MultiPoly::zero(data.yvars);
        std::vector<std::size_t> comb = first_combination(k);
        do {
            std::vector<MultiPoly> minor;
            minor.reserve(k * k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c : comb) minor.push_back(u[r * m + c]);
            MultiPoly det = det_poly_matrix(minor, k);
            if (!det.is_zero()) {
                cert.squares.push_back(det);
                total = total + det * det;
            }
        } while (next_combination(comb, m));
        if (!(total == tf.det_raw))
            throw internal_error("sum of squared minors differs from the discriminant");
        return cert;
    }

    // Floating route: numeric Cholesky of the Gram matrix.
    cert.mode = SosCertificate::Mode::floating;
    cert.factor_route = "cholesky-float";
    std::vector<std::vector<double>> gd(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gd[i][j] = data.gram.at(i, j).to_double();
    std::vector<std::vector<double>> ql(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = gd[i][j];
            for (std::size_t p = 0; p < j; ++p) s -= ql[i][p] * ql[j][p];
            if (i == j) {
                if (s <= 0) throw input_error("floating factorization failure");
                ql[i][i] = std::sqrt(s);
            } else {
                ql[i][j] = s / ql[j][j];
            }
        }
    }
    // Inverse of the lower-triangular factor by forward substitution.
    std::vector<std::vector<double>> qinv(k, std::vector<double>(k, 0.0));
    for (std::size_t c = 0; c < k; ++c) {
        qinv[c][c] = 1.0 / ql[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
            double s = 0;
            for (std::size_t p = c; p < i; ++p) s += ql[i][p] * qinv[p][c];
            qinv[i][c] = -s / ql[i][i];
        }
    }
    RatMatrix ginv = inverse(data.gram);
    auto dmat_of = [&](const PolyMatrix& p) {
        std::vector<DPoly> m(k * k);
        for (std::size_t i = 0; i < k * k; ++i) m[i] = to_dpoly(p.e[i]);
        return m;
    };
    // Symmetric operators: Qinv * (psi * ginv) * Q, all numeric.
    std::vector<std::vector<DPoly>> sym;
    for (const PolyMatrix& psi : data.psi) {
        std::vector<DPoly> mj = dmat_of(psi.mul_rat(ginv));
        std::vector<DPoly> tmp(k * k), res(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                DPoly s;
                for (std::size_t p = 0; p < k; ++p) s = s + mj[p * k + j].scaled(qinv[i][p]);
                tmp[i * k + j] = s;
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                DPoly s;
                for (std::size_t p = 0; p < k; ++p) s = s + tmp[i * k + p].scaled(ql[p][j]);
                res[i * k + j] = s;
            }
        sym.push_back(res);
    }
    // Basis operators over the float matrices.
    std::map<Exps, std::size_t> pos;
    for (std::size_t i = 0; i < tf.basis.size(); ++i) pos[tf.basis[i]] = i;
    std::vector<std::vector<DPoly>> ops(tf.basis.size());
    for (std::size_t i = 0; i < tf.basis.size(); ++i) {
        const Exps& e = tf.basis[i];
        bool is_one = std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
        if (is_one) {
            std::vector<DPoly> id(k * k);
            for (std::size_t r = 0; r < k; ++r) {
                DPoly one;
                one.terms[Exps(data.yvars.size(), 0)] = 1.0;
                id[r * k + r] = one;
            }
            ops[i] = id;
            continue;
        }
        std::size_t j = 0;
        while (e[j] == 0) ++j;
        Exps prev = e;
        --prev[j];
        const std::vector<DPoly>& a = sym[j];
        const std::vector<DPoly>& b = ops[pos.at(prev)];
        std::vector<DPoly> c(k * k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t s = 0; s < k; ++s)
                    c[r * k + s] = c[r * k + s] + a[r * k + p] * b[p * k + s];
        ops[i] = c;
    }
    const std::size_t m = k * k;
    DPoly total;
    std::vector<std::size_t> comb = first_combination(k);
    do {
        std::vector<DPoly> minor;
        minor.reserve(k * k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c : comb) minor.push_back(ops[r][c]);
        DPoly det = dpoly_det(minor, k);
        double norm = 0;
        for (const auto& [e, c] : det.terms) norm += c * c;
        if (norm > 1e-24) {
            cert.squares_float.push_back(det);
            total = total + det * det;
        }
    } while (next_combination(comb, m));

    DPoly target = to_dpoly(tf.det_raw);
    DPoly diff = total - target;
    double num = 0, den = 0;
    for (const auto& [e, c] : diff.terms) num += c * c;
    for (const auto& [e, c] : target.terms) den += c * c;
    cert.residual = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
    if (!(cert.residual < tolerance))
        cert.factor_route += " (residual above tolerance)";
    return cert;
}

MultiPoly disc_oracle_d2(const LinearSpace& l) {
    if (l.d() != 2) throw input_error("fiber discriminant oracle needs a plane");
    if (!l.plucker().full_support())
        throw input_error("coordinate support is not full");
    const int n = l.n();
    std::vector<std::string> yv = y_variables(2);

    // The projection coordinates are the first two members of the basis
    // dual to (rows of the space; kernel rows): columns of the inverse of
    // the stacked frame. They depend only on the space, not on the kernel
    // basis chosen, since the kernel span is fixed.
    RatMatrix frame(n, n);
    for (int j = 0; j < n; ++j) {
        frame.at(0, j) = l.mat().at(0, j);
        frame.at(1, j) = l.mat().at(1, j);
    }
    RatMatrix kernel = orthocomplement(l.mat()).mat;
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < n; ++j) frame.at(i, j) = kernel.at(i - 2, j);
    RatMatrix dual = inverse(frame); // column i represents y_{i+1}

    // Fiber binary form over [Y1 : Y2]: hyperplane Y2 y1(x) - Y1 y2(x) = 0,
    // with coefficients (by power of the first parameter) linear in Y1, Y2.
    std::vector<MultiPoly> f(n, MultiPoly::zero(yv));
    for (int i = 0; i < n; ++i) {
        // prod over j != i of (a_{1j} s + a_{2j} t)
        std::vector<BigRat> prod{BigRat(1)};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<BigRat> next(prod.size() + 1);
            for (std::size_t p = 0; p < prod.size(); ++p) {
                next[p + 1] += prod[p] * l.mat().at(0, j); // s part
                next[p] += prod[p] * l.mat().at(1, j);     // t part
            }
            prod = std::move(next);
        }
        MultiPoly ci = MultiPoly::variable(yv, 1).scaled(dual.at(i, 0)) -
                       MultiPoly::variable(yv, 0).scaled(dual.at(i, 1));
        for (int p = 0; p < n; ++p) f[p] = f[p] + ci.scaled(prod[p]);
    }

    // Partial derivatives as binary forms of degree n-2.
    std::vector<MultiPoly> fs(n - 1, MultiPoly::zero(yv)), ft(n - 1, MultiPoly::zero(yv));
    for (int p = 0; p < n - 1; ++p) {
        fs[p] = f[p + 1].scaled(BigRat(p + 1));
        ft[p] = f[p].scaled(BigRat(n - 1 - p));
    }

    const std::size_t sz = 2 * static_cast<std::size_t>(n - 2);
    std::vector<MultiPoly> syl(sz * sz, MultiPoly::zero(yv));
    const std::size_t deg = static_cast<std::size_t>(n - 2);
    for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j <= deg; ++j) syl[i * sz + i + j] = fs[deg - j];
    for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j <= deg; ++j) syl[(deg + i) * sz + i + j] = ft[deg - j];
    MultiPoly res = det_poly_matrix(syl, sz);
    if (res.is_zero()) throw internal_error("fiber discriminant vanished identically");
    return res.normalized();
}

} // namespace recipchow
