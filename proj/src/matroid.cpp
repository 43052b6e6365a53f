#include "recipchow/matroid.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace recipchow {

Matroid::Matroid(int n, int d, std::vector<std::uint32_t> bases)
    : n_(n), d_(d), bases_(std::move(bases)), basis_set_(bases_.begin(), bases_.end()) {}

Matroid Matroid::from_bases(int n, int d, std::vector<std::uint32_t> bases) {
    if (bases.empty()) throw input_error("matroid needs at least one basis");
    const SubsetTable& t = SubsetTable::get(n, d);
    for (std::uint32_t b : bases)
        if (!t.contains(b)) throw input_error("basis is not a d-subset of the ground set");
    std::sort(bases.begin(), bases.end(),
              [&](std::uint32_t a, std::uint32_t b) { return t.rank(a) < t.rank(b); });
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    Matroid m(n, d, std::move(bases));
    if (n <= 8) {
        for (std::uint32_t b1 : m.bases_)
            for (std::uint32_t b2 : m.bases_) {
                std::uint32_t only1 = b1 & ~b2;
                for (int x = 1; x <= n; ++x) {
                    if (!(only1 & (1u << (x - 1)))) continue;
                    bool ok = false;
                    std::uint32_t only2 = b2 & ~b1;
                    for (int y = 1; y <= n && !ok; ++y)
                        if ((only2 & (1u << (y - 1))) &&
                            m.is_basis((b1 & ~(1u << (x - 1))) | (1u << (y - 1))))
                            ok = true;
                    if (!ok) throw input_error("not a Pluecker vector: basis exchange fails");
                }
            }
    }
    return m;
}

Matroid Matroid::uniform(int d, int n) {
    return Matroid(n, d, SubsetTable::get(n, d).masks());
}

bool Matroid::independent(std::uint32_t mask) const {
    for (std::uint32_t b : bases_)
        if ((mask & b) == mask) return true;
    return false;
}

std::vector<int> Matroid::loops() const {
    std::uint32_t covered = 0;
    for (std::uint32_t b : bases_) covered |= b;
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (!(covered & (1u << (i - 1)))) out.push_back(i);
    return out;
}

Matroid from_support(const PlueckerVector& p) {
    if (p.is_zero()) throw input_error("zero coordinate vector has no matroid");
    return Matroid::from_bases(p.n, p.d, p.support());
}

BccData circuits_and_broken(const Matroid& m) {
    auto lp = m.loops();
    if (!lp.empty())
        throw input_error("matroid has a loop: element " + std::to_string(lp.front()));
    BccData out;
    const int n = m.n();
    // Circuits have size at most rank+1; scan dependent sets by size and
    // keep those whose proper subsets are all independent.
    for (int sz = 2; sz <= std::min(m.rank() + 1, n); ++sz) {
        const SubsetTable& t = SubsetTable::get(n, sz);
        for (std::uint32_t s : t.masks()) {
            bool dependent = sz > m.rank() || !m.independent(s);
            if (!dependent) continue;
            bool minimal = true;
            for (int e = 1; e <= n && minimal; ++e) {
                std::uint32_t bit = 1u << (e - 1);
                if (!(s & bit)) continue;
                std::uint32_t sub = s & ~bit;
                bool sub_indep = (sz - 1 <= m.rank()) && m.independent(sub);
                if (!sub_indep) minimal = false;
            }
            if (minimal) out.circuits.push_back(s);
        }
    }
    for (std::uint32_t c : out.circuits) {
        int mx = mask_to_elems(c).back();
        out.broken_circuits.push_back(c & ~(1u << (mx - 1)));
    }
    for (std::uint32_t b : m.bases()) {
        bool clean = true;
        for (std::uint32_t bc : out.broken_circuits)
            if ((b & bc) == bc) { clean = false; break; }
        if (clean) out.facets.push_back(b);
    }
    return out;
}

std::pair<std::vector<std::uint32_t>, std::size_t> bcc_facets_degree(const Matroid& m) {
    BccData b = circuits_and_broken(m);
    return {b.facets, b.facets.size()};
}

BasisOrder basis_order_check(const Matroid& m) {
    BccData bcc = circuits_and_broken(m);
    const auto& bases = m.bases();
    BasisOrder out;
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < bases.size(); ++i) index[bases[i]] = i;
    std::vector<std::size_t> outdeg(bases.size(), 0);
    std::vector<std::vector<std::size_t>> preds(bases.size());

    for (std::uint32_t b1 : bases)
        for (std::uint32_t b2 : bases) {
            if (b1 == b2) continue;
            std::uint32_t u = b1 | b2;
            if (popcount(u) != m.rank() + 1) continue;
            // Unique circuit inside the (d+1)-set u.
            std::uint32_t circuit = 0;
            for (std::uint32_t c : bcc.circuits)
                if ((u & c) == c) { circuit = c; break; }
            if (circuit == 0) throw internal_error("dependent set without a circuit");
            int mx = mask_to_elems(circuit).back();
            std::uint32_t added = b2 & ~b1;
            if (added == (1u << (mx - 1))) {
                out.covers.emplace_back(b1, b2);
                ++outdeg[index[b1]];
                preds[index[b2]].push_back(index[b1]);
            }
        }

    // Topological check: peel maximal elements; a leftover means a cycle.
    std::vector<std::size_t> deg = outdeg;
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < bases.size(); ++i)
        if (deg[i] == 0) q.push(i);
    std::size_t seen = 0;
    while (!q.empty()) {
        std::size_t i = q.front();
        q.pop();
        ++seen;
        for (std::size_t p : preds[i])
            if (--deg[p] == 0) q.push(p);
    }
    if (seen != bases.size())
        throw internal_error("cycle in the basis partial order");

    for (std::size_t i = 0; i < bases.size(); ++i)
        if (outdeg[i] == 0) out.maximal.push_back(bases[i]);
    if (out.maximal != bcc.facets)
        throw internal_error("maximal bases differ from the broken-circuit facets");
    return out;
}

} // namespace recipchow
