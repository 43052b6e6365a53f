#include "recipchow/detrep.hpp"

#include <algorithm>
#include <unordered_map>

namespace recipchow {

LinearSpace::LinearSpace(RatMatrix mat)
    : mat_(std::move(mat)),
      plucker_(pluecker_from_matrix(mat_)),
      matroid_(from_support(plucker_)) {
    auto lp = matroid_.loops();
    if (!lp.empty())
        throw input_error("space lies in the coordinate hyperplane x_" +
                          std::to_string(lp.front()) + " = 0");
}

std::size_t VectorTable::basis_rank(std::uint32_t mask) const {
    for (std::size_t i = 0; i < basis_sets.size(); ++i)
        if (basis_sets[i] == mask) return i;
    throw input_error("subset is not a basis");
}

std::vector<BigRat> VectorTable::v(std::uint32_t basis_mask) const {
    std::size_t c = basis_rank(basis_mask);
    std::vector<BigRat> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = columns.at(i, c);
    return col;
}

RatMatrix hb_basis(const Matroid& m) {
    const int n = m.n(), d = m.rank();
    const SubsetTable& td = SubsetTable::get(n, d);
    const SubsetTable& tk = SubsetTable::get(n, d - 1);

    // Rows of W are the expansions of e_K ^ (all-ones) over d-subsets.
    RatMatrix w(tk.size(), td.size());
    for (std::size_t r = 0; r < tk.size(); ++r) {
        std::uint32_t kmask = tk.mask(r);
        for (int j = 1; j <= n; ++j) {
            if (kmask & (1u << (j - 1))) continue;
            w.at(r, td.rank(kmask | (1u << (j - 1)))) = BigRat(wedge_append_sign(kmask, j));
        }
    }

    // Combinations of rows vanishing on the non-basis columns.
    std::vector<std::size_t> non_basis;
    for (std::size_t c = 0; c < td.size(); ++c)
        if (!m.is_basis(td.mask(c))) non_basis.push_back(c);
    std::vector<std::size_t> all_rows(tk.size());
    for (std::size_t r = 0; r < tk.size(); ++r) all_rows[r] = r;
    RatMatrix ker = kernel_basis(w.submatrix(all_rows, non_basis).transpose());
    RatMatrix span = ker * w;

    // Restrict to basis columns and reduce.
    const auto& bases = m.bases();
    std::vector<std::size_t> basis_cols;
    basis_cols.reserve(bases.size());
    for (std::uint32_t b : bases) basis_cols.push_back(td.rank(b));
    std::vector<std::size_t> span_rows(span.rows());
    for (std::size_t r = 0; r < span.rows(); ++r) span_rows[r] = r;
    RatMatrix restricted = span.submatrix(span_rows, basis_cols);

    RrefResult rr = rref(restricted);
    std::size_t k = rr.rank;
    auto [facets, fc] = bcc_facets_degree(m);
    if (k != fc)
        throw internal_error("intersection-space dimension differs from facet count");

    RatMatrix h(k, bases.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < bases.size(); ++j) h.at(i, j) = rr.mat.at(i, j);

    // Change basis so the facet columns form the identity.
    std::vector<std::size_t> facet_cols;
    for (std::uint32_t f : facets) {
        auto it = std::find(bases.begin(), bases.end(), f);
        facet_cols.push_back(static_cast<std::size_t>(it - bases.begin()));
    }
    std::vector<std::size_t> hrows(k);
    for (std::size_t i = 0; i < k; ++i) hrows[i] = i;
    RatMatrix f_block = h.submatrix(hrows, facet_cols);
    try {
        return solve(f_block, h); // f_block^{-1} * h
    } catch (const input_error&) {
        throw internal_error("facet columns do not span the intersection space");
    }
}

VectorTable v_vectors(const Matroid& m) {
    VectorTable t;
    t.columns = hb_basis(m);
    t.k = t.columns.rows();
    t.basis_sets = m.bases();
    t.facet_sets = bcc_facets_degree(m).first;
    return t;
}

std::vector<std::string> convention_vars(int n, int d, VarConvention conv) {
    int size = (conv == VarConvention::gamma) ? d : n - d;
    const SubsetTable& t = SubsetTable::get(n, size);
    std::vector<std::string> vars;
    vars.reserve(t.size());
    const char* prefix = (conv == VarConvention::gamma) ? "g_" : "b_";
    for (std::uint32_t msk : t.masks()) vars.push_back(prefix + subset_label(msk));
    return vars;
}

SymLinMatrix phi_symbolic(const LinearSpace& l, VarConvention conv) {
    const int n = l.n(), d = l.d();
    VectorTable vt = v_vectors(l.matroid());
    SymLinMatrix out;
    out.k = vt.k;
    out.vars = convention_vars(n, d, conv);
    out.entries.assign(vt.k * vt.k, MultiPoly::zero(out.vars));

    const SubsetTable& td = SubsetTable::get(n, d);
    const SubsetTable& tc = SubsetTable::get(n, n - d);
    std::uint32_t full = (1u << n) - 1u;
    for (std::size_t c = 0; c < vt.basis_sets.size(); ++c) {
        std::uint32_t bmask = vt.basis_sets[c];
        BigRat alpha = l.plucker().at_mask(bmask);
        std::size_t var;
        BigRat sgn(1);
        if (conv == VarConvention::gamma) {
            var = td.rank(bmask);
        } else {
            var = tc.rank(full & ~bmask);
            if (sign_exponent_parity(bmask)) sgn = -sgn;
        }
        Exps e(out.vars.size(), 0);
        e[var] = 1;
        for (std::size_t i = 0; i < vt.k; ++i) {
            const BigRat& vi = vt.columns.at(i, c);
            if (vi.is_zero()) continue;
            for (std::size_t j = i; j < vt.k; ++j) {
                const BigRat& vj = vt.columns.at(j, c);
                if (vj.is_zero()) continue;
                BigRat coeff = sgn * vi * vj / alpha;
                out.at(i, j).add_term(e, coeff);
                if (i != j) out.at(j, i).add_term(e, coeff);
            }
        }
    }
    return out;
}

SymLinMatrix phi_uniform_values(int n, int d, const std::vector<BigRat>& alpha) {
    const SubsetTable& td = SubsetTable::get(n, d);
    if (alpha.size() != td.size()) throw input_error("alpha value vector has wrong length");
    for (const auto& a : alpha)
        if (a.is_zero()) throw input_error("alpha values must all be nonzero");
    VectorTable vt = v_vectors(Matroid::uniform(d, n));
    SymLinMatrix phi;
    phi.k = vt.k;
    phi.vars = convention_vars(n, d, VarConvention::gamma);
    phi.entries.assign(vt.k * vt.k, MultiPoly::zero(phi.vars));
    for (std::size_t c = 0; c < vt.basis_sets.size(); ++c) {
        Exps e(phi.vars.size(), 0);
        e[c] = 1;
        for (std::size_t i = 0; i < vt.k; ++i)
            for (std::size_t j = 0; j < vt.k; ++j) {
                BigRat coef = vt.columns.at(i, c) * vt.columns.at(j, c) / alpha[c];
                if (!coef.is_zero()) phi.at(i, j).add_term(e, coef);
            }
    }
    return phi;
}

RatMatrix phi_at(const LinearSpace& l, const std::vector<BigRat>& gamma) {
    const SubsetTable& td = SubsetTable::get(l.n(), l.d());
    if (gamma.size() != td.size()) throw input_error("gamma vector has wrong length");
    VectorTable vt = v_vectors(l.matroid());
    RatMatrix m(vt.k, vt.k);
    for (std::size_t c = 0; c < vt.basis_sets.size(); ++c) {
        std::uint32_t bmask = vt.basis_sets[c];
        BigRat f = gamma[td.rank(bmask)] / l.plucker().at_mask(bmask);
        if (f.is_zero()) continue;
        for (std::size_t i = 0; i < vt.k; ++i) {
            if (vt.columns.at(i, c).is_zero()) continue;
            for (std::size_t j = 0; j < vt.k; ++j)
                m.at(i, j) += f * vt.columns.at(i, c) * vt.columns.at(j, c);
        }
    }
    return m;
}

namespace {

// Multiaffine polynomial keyed by a variable bitmask. Only sound when every
// variable's coefficient matrix has rank one, which forces all minors to be
// squarefree in each variable; products are pruned accordingly.
using MaskPoly = std::unordered_map<std::uint64_t, BigRat>;

struct SymlinDet {
    std::size_t k;
    // entry(i,j): sparse linear form as (variable, coefficient) pairs
    std::vector<std::vector<std::pair<std::size_t, BigRat>>> entry;
    std::unordered_map<std::uint64_t, MaskPoly> memo;

    const std::vector<std::pair<std::size_t, BigRat>>& at(std::size_t i, std::size_t j) const {
        return entry[i * k + j];
    }

    const MaskPoly& minor_det(std::uint64_t colmask) {
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        std::size_t row = k - static_cast<std::size_t>(__builtin_popcountll(colmask));
        MaskPoly result;
        int sign = 1;
        for (std::size_t c = 0; c < k; ++c) {
            if (!(colmask & (1ull << c))) continue;
            const auto& lin = at(row, c);
            if (!lin.empty()) {
                const MaskPoly& sub = minor_det(colmask & ~(1ull << c));
                for (const auto& [var, coef] : lin) {
                    std::uint64_t vbit = 1ull << var;
                    for (const auto& [msk, sc] : sub) {
                        if (msk & vbit) continue; // square term, cancels in the sum
                        BigRat t = coef * sc;
                        if (sign < 0) t = -t;
                        auto [pos, fresh] = result.try_emplace(msk | vbit, t);
                        if (!fresh) {
                            pos->second += t;
                            if (pos->second.is_zero()) result.erase(pos);
                        }
                    }
                }
            }
            sign = -sign;
        }
        return memo.emplace(colmask, std::move(result)).first->second;
    }
};

} // namespace

MultiPoly det_symlin(const SymLinMatrix& m) {
    if (m.k == 0) return MultiPoly::constant(m.vars, BigRat(1));
    if (m.k > 28 || m.vars.size() > 64) {
        if (m.vars.size() > 64) throw input_error("too many variables for the expansion");
        throw input_error("matrix too large for the expansion");
    }
    SymlinDet ctx;
    ctx.k = m.k;
    ctx.entry.resize(m.k * m.k);
    for (std::size_t i = 0; i < m.k; ++i)
        for (std::size_t j = 0; j < m.k; ++j) {
            for (const auto& [e, c] : m.at(i, j).terms()) {
                std::size_t var = 0;
                int total = 0;
                for (std::size_t v = 0; v < e.size(); ++v) {
                    total += e[v];
                    if (e[v] == 1) var = v;
                }
                if (total != 1) throw input_error("matrix entries must be homogeneous linear");
                ctx.entry[i * m.k + j].emplace_back(var, c);
            }
        }
    ctx.memo.emplace(0ull, MaskPoly{{0ull, BigRat(1)}});
    std::uint64_t allcols = (m.k == 64) ? ~0ull : ((1ull << m.k) - 1ull);
    const MaskPoly& d = ctx.minor_det(allcols);
    MultiPoly out(m.vars);
    for (const auto& [msk, c] : d) {
        Exps e(m.vars.size(), 0);
        for (std::size_t v = 0; v < m.vars.size(); ++v)
            if (msk & (1ull << v)) e[v] = 1;
        out.add_term(e, c);
    }
    return out;
}

MultiPoly det_poly_matrix(const std::vector<MultiPoly>& entries, std::size_t k) {
    if (k == 0) throw input_error("empty matrix determinant");
    if (entries.size() != k * k) throw input_error("entry count does not match dimension");
    if (k > 20) throw input_error("matrix too large for the expansion");
    const auto& vars = entries.front().vars();
    std::unordered_map<std::uint64_t, MultiPoly> memo;
    memo.emplace(0ull, MultiPoly::constant(vars, BigRat(1)));
    auto rec = [&](auto&& self, std::uint64_t colmask) -> const MultiPoly& {
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        std::size_t row = k - static_cast<std::size_t>(__builtin_popcountll(colmask));
        MultiPoly result = MultiPoly::zero(vars);
        int sign = 1;
        for (std::size_t c = 0; c < k; ++c) {
            if (!(colmask & (1ull << c))) continue;
            const MultiPoly& e = entries[row * k + c];
            if (!e.is_zero()) {
                MultiPoly t = e * self(self, colmask & ~(1ull << c));
                result = (sign > 0) ? result + t : result - t;
            }
            sign = -sign;
        }
        return memo.emplace(colmask, std::move(result)).first->second;
    };
    return rec(rec, (k == 64) ? ~0ull : ((1ull << k) - 1ull));
}

ChowForm chow_form(const LinearSpace& l, VarConvention conv) {
    ChowForm out;
    out.matrix = phi_symbolic(l, conv);
    out.det = det_symlin(out.matrix);
    BigRat prod(1);
    for (std::uint32_t b : l.matroid().bases()) prod *= l.plucker().at_mask(b);
    out.cleared = out.det.scaled(prod);
    out.normalized = out.cleared.normalized();
    return out;
}

MultiPoly chow_det_bisymbolic(int n, int d) {
    Matroid u = Matroid::uniform(d, n);
    VectorTable vt = v_vectors(u);
    const SubsetTable& td = SubsetTable::get(n, d);
    const std::size_t m = td.size();

    std::vector<std::string> vars;
    for (std::uint32_t msk : td.masks()) vars.push_back("a_" + subset_label(msk));
    for (std::uint32_t msk : td.masks()) vars.push_back("g_" + subset_label(msk));

    // Entry (i,j) = sum_I g_I * prod_{J != I} a_J * v_{I,i} v_{I,j}.
    std::vector<MultiPoly> entries(vt.k * vt.k, MultiPoly::zero(vars));
    for (std::size_t c = 0; c < m; ++c) {
        Exps e(vars.size(), 0);
        for (std::size_t j = 0; j < m; ++j) e[j] = (j == c) ? 0 : 1;
        e[m + c] = 1;
        for (std::size_t i = 0; i < vt.k; ++i)
            for (std::size_t j = 0; j < vt.k; ++j) {
                BigRat coef = vt.columns.at(i, c) * vt.columns.at(j, c);
                if (!coef.is_zero()) entries[i * vt.k + j].add_term(e, coef);
            }
    }
    MultiPoly det = det_poly_matrix(entries, vt.k);

    // det(prod_a * phi) = prod_a^k det(phi); dividing by prod_a^(k-1) leaves
    // the cleared form.
    Exps divisor(vars.size(), 0);
    for (std::size_t j = 0; j < m; ++j) divisor[j] = static_cast<int32_t>(vt.k - 1);
    return det.divide_by_monomial(divisor);
}

bool kernel_witness_check(const LinearSpace& l, const std::vector<BigRat>& w,
                          const std::vector<BigRat>& delta) {
    const int n = l.n(), d = l.d();
    if (static_cast<int>(w.size()) != n) throw input_error("witness vector has wrong length");
    for (const auto& wi : w)
        if (wi.is_zero()) throw input_error("witness vector has a zero coordinate");

    // w^{-1} must lie in the row span.
    RatMatrix ext(d + 1, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) ext.at(i, j) = l.mat().at(i, j);
    for (int j = 0; j < n; ++j) ext.at(d, j) = w[j].inverse();
    if (rank(ext) != static_cast<std::size_t>(d))
        throw input_error("reciprocal of the witness is not in the space");

    const SubsetTable& tdm1 = SubsetTable::get(n, n - d - 1);
    if (delta.size() != tdm1.size()) throw input_error("delta coefficient vector has wrong length");

    VectorTable vt = v_vectors(l.matroid());
    std::vector<BigRat> beta = wedge_with_vector(n, n - d - 1, delta, w);
    RatMatrix a = phi_at(l, functional_from_wedge(n, d, beta));

    // Facet coordinates of diag_w(alpha).
    PlueckerVector scaled = diag_scale(l.plucker(), w);
    RatMatrix u(vt.k, 1);
    for (std::size_t i = 0; i < vt.k; ++i) u.at(i, 0) = scaled.at_mask(vt.facet_sets[i]);

    RatMatrix prod = a * u;
    for (std::size_t i = 0; i < vt.k; ++i)
        if (!prod.at(i, 0).is_zero()) return false;
    return true;
}

} // namespace recipchow
