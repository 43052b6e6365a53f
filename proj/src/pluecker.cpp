#include "recipchow/pluecker.hpp"

#include <optional>

namespace recipchow {

bool PlueckerVector::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<std::uint32_t> PlueckerVector::support() const {
    const SubsetTable& t = SubsetTable::get(n, d);
    std::vector<std::uint32_t> s;
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        if (!coeffs[r].is_zero()) s.push_back(t.mask(r));
    return s;
}

bool PlueckerVector::full_support() const {
    for (const auto& c : coeffs)
        if (c.is_zero()) return false;
    return true;
}

PlueckerVector PlueckerVector::display_normalized() const {
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        PlueckerVector out{n, d, {}};
        out.coeffs.reserve(coeffs.size());
        BigRat inv = c.inverse(); // first nonzero coordinate becomes 1
        for (const auto& x : coeffs) out.coeffs.push_back(x * inv);
        return out;
    }
    return *this;
}

PlueckerVector pluecker_from_matrix(const RatMatrix& a) {
    const int d = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (d > n) throw input_error("matrix has more rows than columns");
    if (rank(a) < a.rows()) throw input_error("matrix does not have full row rank");
    const SubsetTable& t = SubsetTable::get(n, d);
    PlueckerVector p{n, d, std::vector<BigRat>(t.size())};
    std::vector<std::size_t> all_rows(d);
    for (int i = 0; i < d; ++i) all_rows[i] = i;
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::vector<int> elems = mask_to_elems(t.mask(r));
        std::vector<std::size_t> cols;
        cols.reserve(elems.size());
        for (int e : elems) cols.push_back(static_cast<std::size_t>(e - 1));
        p.coeffs[r] = det_exact(a.submatrix(all_rows, cols));
    }
    return p;
}

Orthocomplement orthocomplement(const RatMatrix& a) {
    const int d = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (rank(a) < a.rows()) throw input_error("matrix does not have full row rank");
    Orthocomplement out;
    out.mat = kernel_basis(a);
    out.plucker = pluecker_from_matrix(out.mat);

    // The coordinates of the kernel must match the complementary minors of
    // the input up to one global scalar and the fixed sign pattern.
    PlueckerVector p = pluecker_from_matrix(a);
    const SubsetTable& tc = SubsetTable::get(n, n - d);
    std::optional<BigRat> scale;
    for (std::size_t r = 0; r < tc.size(); ++r) {
        std::uint32_t j = tc.mask(r);
        std::uint32_t comp = (n == 32 ? ~0u : ((1u << n) - 1u)) & ~j;
        BigRat expect = p.at_mask(comp);
        if (sign_exponent_parity(comp)) expect = -expect;
        const BigRat& got = out.plucker.coeffs[r];
        if (expect.is_zero() != got.is_zero())
            throw internal_error("orthocomplement: support mismatch with complementary minors");
        if (expect.is_zero()) continue;
        BigRat ratio = got / expect;
        if (!scale) scale = ratio;
        else if (*scale != ratio)
            throw internal_error("orthocomplement: complementary-minor identity violated");
    }
    return out;
}

BigRat pairing_transversal(const PlueckerVector& p_l, const PlueckerVector& p_m_perp) {
    if (p_l.n != p_m_perp.n || p_l.d != p_m_perp.d)
        throw input_error("pairing of incompatible coordinate vectors");
    BigRat s(0);
    for (std::size_t r = 0; r < p_l.coeffs.size(); ++r) s += p_l.coeffs[r] * p_m_perp.coeffs[r];
    return s;
}

PlueckerVector dual_plucker(const PlueckerVector& p) {
    const int n = p.n, c = p.d;
    const SubsetTable& tin = SubsetTable::get(n, c);
    const SubsetTable& tout = SubsetTable::get(n, n - c);
    PlueckerVector out{n, n - c, std::vector<BigRat>(tout.size())};
    std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1u));
    for (std::size_t r = 0; r < tout.size(); ++r) {
        std::uint32_t i = tout.mask(r);
        BigRat v = p.coeffs[tin.rank(full & ~i)];
        out.coeffs[r] = sign_exponent_parity(i) ? -v : v;
    }
    return out;
}

PlueckerVector diag_scale(const PlueckerVector& p, const std::vector<BigRat>& w) {
    if (static_cast<int>(w.size()) != p.n) throw input_error("diag scale dimension mismatch");
    const SubsetTable& t = SubsetTable::get(p.n, p.d);
    PlueckerVector out = p;
    for (std::size_t r = 0; r < t.size(); ++r) {
        for (int e : mask_to_elems(t.mask(r))) out.coeffs[r] *= w[e - 1];
    }
    return out;
}

std::vector<BigRat> functional_from_wedge(int n, int d, const std::vector<BigRat>& beta) {
    const SubsetTable& td = SubsetTable::get(n, d);
    const SubsetTable& tc = SubsetTable::get(n, n - d);
    if (beta.size() != tc.size()) throw input_error("wedge coefficient vector has wrong length");
    std::uint32_t full = (n == 32 ? ~0u : ((1u << n) - 1u));
    std::vector<BigRat> gamma(td.size());
    for (std::size_t r = 0; r < td.size(); ++r) {
        std::uint32_t i = td.mask(r);
        BigRat v = beta[tc.rank(full & ~i)];
        gamma[r] = sign_exponent_parity(i) ? -v : v;
    }
    return gamma;
}

std::vector<BigRat> wedge_with_vector(int n, int k, const std::vector<BigRat>& coeffs,
                                      const std::vector<BigRat>& w) {
    const SubsetTable& tin = SubsetTable::get(n, k);
    const SubsetTable& tout = SubsetTable::get(n, k + 1);
    if (coeffs.size() != tin.size() || static_cast<int>(w.size()) != n)
        throw input_error("wedge dimension mismatch");
    std::vector<BigRat> out(tout.size());
    for (std::size_t r = 0; r < tin.size(); ++r) {
        if (coeffs[r].is_zero()) continue;
        std::uint32_t kmask = tin.mask(r);
        for (int j = 1; j <= n; ++j) {
            if (kmask & (1u << (j - 1))) continue;
            if (w[j - 1].is_zero()) continue;
            BigRat term = coeffs[r] * w[j - 1];
            if (wedge_append_sign(kmask, j) < 0) term = -term;
            out[tout.rank(kmask | (1u << (j - 1)))] += term;
        }
    }
    return out;
}

} // namespace recipchow
