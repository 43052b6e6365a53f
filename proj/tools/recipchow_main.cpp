#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recipchow/space_io.hpp"
#include "recipchow/verify.hpp"

namespace rc = recipchow;
using rc::ordered_json;

namespace {

struct Options {
    std::string input, input2;
    std::string vars = "gamma";
    std::string format = "json";
    std::string suite = "all";
    std::uint64_t seed = 1;
    double tolerance = 1e-9;
    bool cleared = false;
    int n = 0, d = 0;
};

rc::VarConvention convention(const Options& o) {
    if (o.vars == "gamma") return rc::VarConvention::gamma;
    if (o.vars == "beta") return rc::VarConvention::beta;
    throw rc::input_error("--vars must be gamma or beta");
}

void emit(const ordered_json& j, const Options& o) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (o.format != "text") throw rc::input_error("--format must be json or text");
    // Flat text rendering, stable across runs.
    std::function<void(const ordered_json&, const std::string&)> walk =
        [&](const ordered_json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                for (std::size_t i = 0; i < node.size(); ++i)
                    walk(node[i], prefix + "[" + std::to_string(i) + "]");
            } else {
                std::cout << prefix << " = " << (node.is_string() ? node.get<std::string>() : node.dump())
                          << "\n";
            }
        };
    walk(j, "");
}

ordered_json polymatrix_json(const rc::SymLinMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.k; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.k; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

ordered_json dpoly_json(const rc::DPoly& p) {
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        ordered_json t;
        t["coeff"] = it->second;
        t["exps"] = it->first;
        terms.push_back(t);
    }
    return terms;
}

int run_pluecker(const Options& o) {
    rc::SpaceFile f = rc::load_space_file(o.input);
    rc::LinearSpace l(f.mat);
    ordered_json j = rc::plucker_to_json(l.plucker());
    emit(j, o);
    return 0;
}

int run_matroid(const Options& o) {
    rc::SpaceFile f = rc::load_space_file(o.input);
    rc::LinearSpace l(f.mat);
    rc::BccData bcc = rc::circuits_and_broken(l.matroid());
    auto label_list = [](const std::vector<std::uint32_t>& v) {
        ordered_json a = ordered_json::array();
        for (std::uint32_t m : v) a.push_back(rc::subset_label(m));
        return a;
    };
    ordered_json j;
    j["n"] = l.n();
    j["rank"] = l.d();
    j["bases"] = label_list(l.matroid().bases());
    j["circuits"] = label_list(bcc.circuits);
    j["broken_circuits"] = label_list(bcc.broken_circuits);
    j["facets"] = label_list(bcc.facets);
    j["degree"] = bcc.facets.size();
    emit(j, o);
    return 0;
}

int run_chow(const Options& o) {
    rc::SpaceFile f = rc::load_space_file(o.input);
    rc::LinearSpace l(f.mat);
    rc::ChowForm cf = rc::chow_form(l, convention(o));
    ordered_json j;
    j["k"] = cf.matrix.k;
    j["convention"] = o.vars;
    j["matrix"] = polymatrix_json(cf.matrix);
    j["determinant"] = rc::multipoly_to_json(o.cleared ? cf.normalized : cf.det);
    if (o.cleared) j["normalization"] = "content 1, positive leading coefficient";
    emit(j, o);
    return 0;
}

int run_expand(const Options& o) {
    ordered_json j;
    if (!o.input.empty()) {
        rc::SpaceFile f = rc::load_space_file(o.input);
        rc::LinearSpace l(f.mat);
        j["expansion"] = rc::multipoly_to_json(
            rc::forest_expansion(l.n(), l.d(), l.plucker().coeffs));
    } else {
        if (o.n == 0 || o.d == 0) throw rc::input_error("expand needs --input or --n and --d");
        j["expansion"] = rc::multipoly_to_json(rc::forest_expansion(o.n, o.d, std::nullopt));
    }
    emit(j, o);
    return 0;
}

int run_bichow(const Options& o) {
    int n = o.n, d = o.d;
    std::optional<rc::LinearSpace> l;
    if (!o.input.empty()) {
        l.emplace(rc::load_space_file(o.input).mat);
        n = l->n();
        d = l->d();
    }
    if (n == 0 || d == 0) throw rc::input_error("bichow needs --input or --n and --d");
    ordered_json j;
    rc::MultiPoly p = rc::bichow_form(n, d);
    if (l) {
        // Specialize the first coordinate set to the given space.
        const rc::SubsetTable& t = rc::SubsetTable::get(n, d);
        for (std::size_t r = 0; r < t.size(); ++r)
            p = p.substitute(r, l->plucker().coeffs[r]);
    }
    if (!o.input2.empty()) {
        rc::RatMatrix m = rc::load_space_file(o.input2).mat;
        rc::Orthocomplement oc = rc::orthocomplement(m);
        // The second coordinate block sits after the first in the table.
        const rc::SubsetTable& t = rc::SubsetTable::get(n, d);
        for (std::size_t r = 0; r < t.size(); ++r)
            p = p.substitute(t.size() + r, oc.plucker.coeffs[r]);
    }
    j["bichow"] = rc::multipoly_to_json(p);
    emit(j, o);
    return 0;
}

int run_hadamard(const Options& o) {
    ordered_json j;
    if (o.input.empty()) {
        if (o.n == 0 || o.d == 0) throw rc::input_error("hadamard needs inputs or --n and --d");
        j["surface"] = rc::multipoly_to_json(rc::hadamard_symbolic(o.n, o.d));
    } else {
        if (o.input2.empty()) throw rc::input_error("hadamard needs --input2");
        rc::LinearSpace l(rc::load_space_file(o.input).mat);
        rc::RatMatrix m = rc::load_space_file(o.input2).mat;
        rc::MultiPoly surf = rc::hadamard_surface(l, m);
        j["degree"] = surf.total_degree();
        j["surface"] = rc::multipoly_to_json(surf);
    }
    emit(j, o);
    return 0;
}

int run_entropic(const Options& o) {
    rc::SpaceFile f = rc::load_space_file(o.input);
    rc::LinearSpace l(f.mat);
    rc::EntropicData data = rc::mult_matrices(l, f.kernel_basis);
    rc::TraceForm tf = rc::trace_form_disc(data);
    rc::SosCertificate cert = rc::sos_certificate(data, tf, o.tolerance);

    ordered_json j;
    j["space_basis"] = rc::matrix_to_json(data.space_basis);
    j["kernel_basis"] = rc::matrix_to_json(data.kernel_basis);
    j["gram"] = rc::matrix_to_json(data.gram);
    ordered_json traces = ordered_json::array();
    for (const auto& m : data.mult) traces.push_back(m.trace().str());
    j["multiplication_traces"] = traces;
    ordered_json h = ordered_json::array();
    for (std::size_t i = 0; i < tf.h.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < tf.h.cols; ++c) row.push_back(tf.h.at(i, c).str());
        h.push_back(row);
    }
    j["trace_form"] = h;
    j["det_raw"] = rc::multipoly_to_json(tf.det_raw);
    j["det_normalized"] = rc::multipoly_to_json(tf.det_normalized);
    j["sos_mode"] = cert.mode == rc::SosCertificate::Mode::exact ? "exact" : "floating";
    j["sos_factor_route"] = cert.factor_route;
    if (cert.mode == rc::SosCertificate::Mode::exact) {
        j["sos_q"] = rc::matrix_to_json(cert.q);
        ordered_json sq = ordered_json::array();
        for (const auto& p : cert.squares) sq.push_back(rc::multipoly_to_json(p));
        j["sos_squares"] = sq;
    } else {
        j["sos_residual"] = cert.residual;
        ordered_json sq = ordered_json::array();
        for (const auto& p : cert.squares_float) sq.push_back(dpoly_json(p));
        j["sos_squares"] = sq;
    }
    emit(j, o);
    return 0;
}

int run_resultant(const Options& o) {
    if (o.input.empty() || o.input2.empty())
        throw rc::input_error("resultant needs --input and --input2");
    rc::RatMatrix a = rc::load_space_file(o.input).mat;
    rc::RatMatrix c = rc::load_space_file(o.input2).mat;
    rc::BigRat tree = rc::tree_resultant(a, c);
    ordered_json j;
    j["tree_sum"] = tree.str();
    j["vanishes"] = tree.is_zero();
    emit(j, o);
    return 0;
}

int run_verify(const Options& o) {
    auto results = rc::run_verify_suites(o.suite, o.seed);
    ordered_json j;
    ordered_json arr = ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        ordered_json e;
        e["suite"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
        all = all && r.pass;
    }
    j["seed"] = o.seed;
    j["results"] = arr;
    j["pass"] = all;
    emit(j, o);
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chow forms, Hadamard hypersurfaces and entropic "
                 "discriminants of reciprocal linear spaces"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input", o.input, "space file (JSON)");
        if (needs_input) in->required();
        cmd->add_option("--format", o.format, "json|text");
        return cmd;
    };

    auto* c_pluecker = add_common(app.add_subcommand("pluecker", "coordinates of a space"), true);
    auto* c_matroid = add_common(app.add_subcommand("matroid", "matroid data of a space"), true);
    auto* c_chow = add_common(app.add_subcommand("chow", "determinantal representation"), true);
    c_chow->add_option("--vars", o.vars, "gamma|beta");
    c_chow->add_flag("--cleared", o.cleared, "clear denominators and normalize");
    auto* c_expand = add_common(app.add_subcommand("expand", "forest expansion"), false);
    c_expand->add_option("--n", o.n, "ground set size");
    c_expand->add_option("--d", o.d, "rank");
    auto* c_bichow = add_common(app.add_subcommand("bichow", "bihomogeneous pairing form"), false);
    c_bichow->add_option("--n", o.n, "ground set size");
    c_bichow->add_option("--d", o.d, "rank");
    c_bichow->add_option("--input2", o.input2, "second space file");
    auto* c_hadamard = add_common(app.add_subcommand("hadamard", "product hypersurface"), false);
    c_hadamard->add_option("--n", o.n, "ground set size");
    c_hadamard->add_option("--d", o.d, "rank");
    c_hadamard->add_option("--input2", o.input2, "second space file");
    auto* c_entropic = add_common(app.add_subcommand("entropic", "trace form and certificate"), true);
    c_entropic->add_option("--tolerance", o.tolerance, "floating residual tolerance");
    auto* c_resultant = add_common(app.add_subcommand("resultant", "tree-sum pairing"), true);
    c_resultant->add_option("--input2", o.input2, "second coefficient matrix")->required();
    auto* c_verify = app.add_subcommand("verify", "randomized self-checks");
    c_verify->add_option("--suite", o.suite, "suite name or all");
    c_verify->add_option("--seed", o.seed, "random seed");
    c_verify->add_option("--format", o.format, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_pluecker)) return run_pluecker(o);
        if (app.got_subcommand(c_matroid)) return run_matroid(o);
        if (app.got_subcommand(c_chow)) return run_chow(o);
        if (app.got_subcommand(c_expand)) return run_expand(o);
        if (app.got_subcommand(c_bichow)) return run_bichow(o);
        if (app.got_subcommand(c_hadamard)) return run_hadamard(o);
        if (app.got_subcommand(c_entropic)) return run_entropic(o);
        if (app.got_subcommand(c_resultant)) return run_resultant(o);
        if (app.got_subcommand(c_verify)) return run_verify(o);
    } catch (const rc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const rc::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
