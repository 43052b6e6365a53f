#pragma once

// Frozen expected values for the worked examples used across the test
// suites: the 16-term bihomogeneous form on four elements, its product
// hypersurface, and the trace-form data of the interpolation plane.

#include <array>
#include <string>
#include <vector>

#include "recipchow/multipoly.hpp"
#include "recipchow/subsets.hpp"

namespace rctest {

using recipchow::BigRat;
using recipchow::Exps;
using recipchow::MultiPoly;
using recipchow::SubsetTable;

struct TreeTerm {
    std::array<const char*, 3> alpha;
    std::array<const char*, 3> gamma;
    std::array<int, 4> x; // exponents in the product hypersurface
};

// One row per spanning tree of the complete graph on four vertices.
inline const std::vector<TreeTerm>& tree_terms_4() {
    static const std::vector<TreeTerm> terms{
        {{"23", "24", "34"}, {"12", "13", "14"}, {2, 0, 0, 0}},
        {{"13", "24", "34"}, {"12", "14", "23"}, {1, 1, 0, 0}},
        {{"12", "24", "34"}, {"13", "14", "23"}, {1, 0, 1, 0}},
        {{"14", "23", "34"}, {"12", "13", "24"}, {1, 1, 0, 0}},
        {{"12", "23", "34"}, {"13", "14", "24"}, {1, 0, 0, 1}},
        {{"13", "14", "34"}, {"12", "23", "24"}, {0, 2, 0, 0}},
        {{"12", "14", "34"}, {"13", "23", "24"}, {0, 1, 1, 0}},
        {{"12", "13", "34"}, {"14", "23", "24"}, {0, 1, 0, 1}},
        {{"14", "23", "24"}, {"12", "13", "34"}, {1, 0, 1, 0}},
        {{"13", "23", "24"}, {"12", "14", "34"}, {1, 0, 0, 1}},
        {{"13", "14", "24"}, {"12", "23", "34"}, {0, 1, 1, 0}},
        {{"12", "14", "24"}, {"13", "23", "34"}, {0, 0, 2, 0}},
        {{"12", "13", "24"}, {"14", "23", "34"}, {0, 0, 1, 1}},
        {{"13", "14", "23"}, {"12", "24", "34"}, {0, 1, 0, 1}},
        {{"12", "14", "23"}, {"13", "24", "34"}, {0, 0, 1, 1}},
        {{"12", "13", "23"}, {"14", "24", "34"}, {0, 0, 0, 2}},
    };
    return terms;
}

// The bihomogeneous form over a_12..a_34, g_12..g_34 (lex order each).
inline MultiPoly bichow_golden_4() {
    const SubsetTable& t = SubsetTable::get(4, 2);
    std::vector<std::string> vars;
    for (auto m : t.masks()) vars.push_back("a_" + recipchow::subset_label(m));
    for (auto m : t.masks()) vars.push_back("g_" + recipchow::subset_label(m));
    MultiPoly p(vars);
    for (const TreeTerm& term : tree_terms_4()) {
        Exps e(12, 0);
        for (const char* a : term.alpha)
            e[t.rank(recipchow::elems_to_mask({a[0] - '0', a[1] - '0'}, 4))] = 1;
        for (const char* g : term.gamma)
            e[6 + t.rank(recipchow::elems_to_mask({g[0] - '0', g[1] - '0'}, 4))] = 1;
        p.add_term(e, BigRat(1));
    }
    return p;
}

// Same data with the vertex exponents, over a_*, g_*, x1..x4.
inline MultiPoly hadamard_golden_4() {
    const SubsetTable& t = SubsetTable::get(4, 2);
    std::vector<std::string> vars;
    for (auto m : t.masks()) vars.push_back("a_" + recipchow::subset_label(m));
    for (auto m : t.masks()) vars.push_back("g_" + recipchow::subset_label(m));
    for (int i = 1; i <= 4; ++i) vars.push_back("x" + std::to_string(i));
    MultiPoly p(vars);
    for (const TreeTerm& term : tree_terms_4()) {
        Exps e(16, 0);
        for (const char* a : term.alpha)
            e[t.rank(recipchow::elems_to_mask({a[0] - '0', a[1] - '0'}, 4))] = 1;
        for (const char* g : term.gamma)
            e[6 + t.rank(recipchow::elems_to_mask({g[0] - '0', g[1] - '0'}, 4))] = 1;
        for (int i = 0; i < 4; ++i) e[12 + i] = term.x[i];
        p.add_term(e, BigRat(1));
    }
    return p;
}

// Trace form of the plane spanned by (1,1,1,1) and (0,1,2,3), in y1, y2.
inline MultiPoly h_entry(const std::vector<std::string>& yv, const char* c20,
                         const char* c11, const char* c02) {
    MultiPoly p(yv);
    p.add_term({2, 0}, BigRat::parse(c20));
    p.add_term({1, 1}, BigRat::parse(c11));
    p.add_term({0, 2}, BigRat::parse(c02));
    return p;
}

inline MultiPoly h_linear(const std::vector<std::string>& yv, const char* c10, const char* c01) {
    MultiPoly p(yv);
    p.add_term({1, 0}, BigRat::parse(c10));
    p.add_term({0, 1}, BigRat::parse(c01));
    return p;
}

// 45 y1^4 + 270 y1^3 y2 + 763 y1^2 y2^2 + 1074 y1 y2^3 + 773 y2^4
inline MultiPoly entropic_quartic(const std::vector<std::string>& yv, const BigRat& scale) {
    MultiPoly p(yv);
    p.add_term({4, 0}, BigRat(45) * scale);
    p.add_term({3, 1}, BigRat(270) * scale);
    p.add_term({2, 2}, BigRat(763) * scale);
    p.add_term({1, 3}, BigRat(1074) * scale);
    p.add_term({0, 4}, BigRat(773) * scale);
    return p;
}

} // namespace rctest
