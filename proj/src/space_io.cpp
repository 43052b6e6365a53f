#include "recipchow/space_io.hpp"

#include <fstream>

namespace recipchow {

namespace {

BigRat rat_from_json(const ordered_json& v) {
    if (v.is_string()) return BigRat::parse(v.get<std::string>());
    if (v.is_number_integer()) return BigRat(v.get<long>());
    throw input_error("rational entries must be strings like \"p/q\" or integers");
}

} // namespace

RatMatrix matrix_from_json(const ordered_json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw input_error("matrix object needs rows, cols and entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& e = j.at("entries");
    if (!e.is_array() || e.size() != rows)
        throw input_error("entries must be an array with one row per matrix row");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!e[i].is_array() || e[i].size() != cols)
            throw input_error("row " + std::to_string(i) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(e[i][c]);
    }
    return m;
}

ordered_json matrix_to_json(const RatMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

SpaceFile space_from_json(const ordered_json& j) {
    SpaceFile f;
    f.mat = matrix_from_json(j);
    if (j.contains("kernel_basis")) f.kernel_basis = matrix_from_json(j.at("kernel_basis"));
    return f;
}

SpaceFile load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("parse failure in " + path + ": " + e.what());
    }
    return space_from_json(j);
}

ordered_json multipoly_to_json(const MultiPoly& p) {
    ordered_json j;
    j["vars"] = p.vars();
    ordered_json terms = ordered_json::array();
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        ordered_json term;
        term["coeff"] = it->second.str();
        term["exps"] = it->first;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

MultiPoly multipoly_from_json(const ordered_json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw input_error("polynomial object needs vars and terms");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly p(vars);
    for (const auto& term : j.at("terms")) {
        Exps e = term.at("exps").get<Exps>();
        p.add_term(e, rat_from_json(term.at("coeff")));
    }
    return p;
}

ordered_json plucker_to_json(const PlueckerVector& p) {
    ordered_json j;
    j["n"] = p.n;
    j["d"] = p.d;
    const SubsetTable& t = SubsetTable::get(p.n, p.d);
    ordered_json coords = ordered_json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
        ordered_json c;
        c["I"] = mask_to_elems(t.mask(r));
        c["value"] = p.coeffs[r].str();
        coords.push_back(c);
    }
    j["coordinates"] = coords;
    return j;
}

} // namespace recipchow
