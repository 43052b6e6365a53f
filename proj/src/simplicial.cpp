#include "recipchow/simplicial.hpp"

#include <algorithm>

namespace recipchow {

IntMatrix boundary_matrix(int n, int d) {
    if (d < 1 || d > n) throw input_error("boundary matrix needs 1 <= d <= n");
    const SubsetTable& trow = SubsetTable::get(n, d - 1);
    const SubsetTable& tcol = SubsetTable::get(n, d);
    IntMatrix m(trow.size(), tcol.size());
    for (std::size_t c = 0; c < tcol.size(); ++c) {
        std::vector<int> elems = mask_to_elems(tcol.mask(c));
        for (std::size_t j = 0; j < elems.size(); ++j) {
            std::uint32_t sub = tcol.mask(c) & ~(1u << (elems[j] - 1));
            m.at(trow.rank(sub), c) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

VectorTable uniform_v_vectors(int n, int d) {
    if (d < 2 || d >= n) throw input_error("uniform table needs 2 <= d < n");
    const SubsetTable& trow = SubsetTable::get(n - 1, d - 1);
    const SubsetTable& tcol = SubsetTable::get(n, d);
    VectorTable t;
    t.k = trow.size();
    t.basis_sets = tcol.masks();
    for (std::uint32_t msk : tcol.masks())
        if (msk & (1u << (n - 1))) t.facet_sets.push_back(msk);
    t.columns = RatMatrix(t.k, tcol.size());
    for (std::size_t c = 0; c < tcol.size(); ++c) {
        std::uint32_t i = tcol.mask(c);
        if (i & (1u << (n - 1))) {
            t.columns.at(trow.rank(i & ~(1u << (n - 1))), c) = BigRat(1);
        } else {
            std::vector<int> elems = mask_to_elems(i);
            for (std::size_t pos = 0; pos < elems.size(); ++pos) {
                std::uint32_t sub = i & ~(1u << (elems[pos] - 1));
                // pos+1 is the 1-based position of the removed element
                t.columns.at(trow.rank(sub), c) = BigRat((pos % 2 == 0) ? -1 : 1);
            }
        }
    }
    return t;
}

namespace {

struct ForestEnumerator {
    std::size_t k = 0, m = 0;
    IntMatrix v; // k x m, root-deleted incidence rows
    const std::function<void(const Forest&)>* visit = nullptr;

    std::vector<std::size_t> chosen;
    std::vector<std::vector<BigRat>> pivots; // reduced echelon rows
    std::vector<std::size_t> pivot_cols;

    bool try_add_column(std::size_t c) {
        std::vector<BigRat> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = BigRat(v.at(i, c));
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            const BigRat& x = col[pivot_cols[p]];
            if (x.is_zero()) continue;
            BigRat f = x;
            for (std::size_t i = 0; i < k; ++i) col[i] -= f * pivots[p][i];
        }
        std::size_t lead = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!col[i].is_zero()) { lead = i; break; }
        if (lead == k) return false;
        BigRat inv = col[lead].inverse();
        for (std::size_t i = 0; i < k; ++i) col[i] *= inv;
        pivots.push_back(std::move(col));
        pivot_cols.push_back(lead);
        return true;
    }

    void pop_column() {
        pivots.pop_back();
        pivot_cols.pop_back();
    }

    void emit() {
        Forest f;
        f.cols = chosen;
        IntMatrix sub(k, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < k; ++i) sub.at(i, j) = v.at(i, chosen[j]);
        f.det = det_bareiss(sub);
        std::vector<mpz_class> inv = smith_normal_form(sub);
        mpz_class prod = 1;
        for (const auto& z : inv) prod *= z;
        if (prod != abs(f.det))
            throw internal_error("forest coefficient mismatch between minor and invariant factors");
        f.coefficient = f.det * f.det;
        (*visit)(f);
    }

    void rec(std::size_t start) {
        if (chosen.size() == k) {
            emit();
            return;
        }
        for (std::size_t c = start; c + (k - chosen.size()) <= m; ++c) {
            if (!try_add_column(c)) continue;
            chosen.push_back(c);
            rec(c + 1);
            chosen.pop_back();
            pop_column();
        }
    }
};

} // namespace

void enumerate_spanning_forests(int n, int d, const std::function<void(const Forest&)>& visit) {
    const SubsetTable& tcol = SubsetTable::get(n, d);
    if (tcol.size() > 20) throw input_error("enumeration envelope exceeded: more than 20 columns");
    const SubsetTable& trow_full = SubsetTable::get(n, d - 1);
    const SubsetTable& trow = (d >= 2) ? SubsetTable::get(n - 1, d - 1) : SubsetTable::get(n - 1, 0);
    IntMatrix full = boundary_matrix(n, d);

    ForestEnumerator e;
    e.k = trow.size();
    e.m = tcol.size();
    e.v = IntMatrix(e.k, e.m);
    // Keep the incidence rows avoiding the last vertex.
    for (std::size_t r = 0; r < trow.size(); ++r) {
        std::size_t src = trow_full.rank(trow.mask(r));
        for (std::size_t c = 0; c < e.m; ++c) e.v.at(r, c) = full.at(src, c);
    }
    e.visit = &visit;
    e.rec(0);
}

MultiPoly forest_expansion(int n, int d, const std::optional<std::vector<BigRat>>& alpha) {
    const SubsetTable& tcol = SubsetTable::get(n, d);
    const std::size_t m = tcol.size();
    if (alpha && alpha->size() != m) throw input_error("alpha value vector has wrong length");
    if (alpha)
        for (const auto& a : *alpha)
            if (a.is_zero()) throw input_error("alpha values must all be nonzero");

    std::vector<std::string> vars;
    if (!alpha)
        for (std::uint32_t msk : tcol.masks()) vars.push_back("a_" + subset_label(msk));
    for (std::uint32_t msk : tcol.masks()) vars.push_back("g_" + subset_label(msk));
    MultiPoly out(vars);

    enumerate_spanning_forests(n, d, [&](const Forest& f) {
        Exps e(vars.size(), 0);
        BigRat coef{f.coefficient};
        std::vector<bool> in_forest(m, false);
        for (std::size_t c : f.cols) in_forest[c] = true;
        for (std::size_t c = 0; c < m; ++c) {
            if (in_forest[c]) {
                e[(alpha ? 0 : m) + c] = 1;
            } else if (alpha) {
                coef *= (*alpha)[c];
            } else {
                e[c] = 1;
            }
        }
        out.add_term(e, coef);
    });
    return out;
}

BigRat tree_resultant(const RatMatrix& a, const RatMatrix& c) {
    if (a.rows() != 2 || c.rows() != 2 || a.cols() != c.cols())
        throw input_error("tree pairing needs two 2 x n matrices");
    const int n = static_cast<int>(a.cols());
    PlueckerVector pa = pluecker_from_matrix(a);
    if (!pa.full_support())
        throw input_error("columns are not pairwise independent: repeated root");
    // c may be anything of the right shape, including rank one.
    const SubsetTable& t2 = SubsetTable::get(n, 2);
    std::vector<BigRat> pc(t2.size());
    for (std::size_t r = 0; r < t2.size(); ++r) {
        std::vector<int> e = mask_to_elems(t2.mask(r));
        pc[r] = c.at(0, e[0] - 1) * c.at(1, e[1] - 1) - c.at(0, e[1] - 1) * c.at(1, e[0] - 1);
    }
    BigRat total(0);
    enumerate_spanning_forests(n, 2, [&](const Forest& f) {
        if (f.coefficient != 1)
            throw internal_error("graph minor is not unimodular");
        BigRat term(1);
        std::vector<bool> in_tree(t2.size(), false);
        for (std::size_t col : f.cols) in_tree[col] = true;
        for (std::size_t r = 0; r < t2.size(); ++r) term *= in_tree[r] ? pc[r] : pa.coeffs[r];
        total += term;
    });
    return total;
}

} // namespace recipchow
