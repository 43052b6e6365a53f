#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "recipchow/space_io.hpp"

using namespace recipchow;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RECIPCHOW_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int raw = pclose(p);
    r.status = WEXITSTATUS(raw);
    return r;
}

std::string data(const std::string& name) {
    return std::string(RECIPCHOW_TEST_DATA) + "/" + name;
}

} // namespace

TEST_CASE("pluecker subcommand") {
    CliResult r = run_cli("pluecker --input " + data("ex65.json"));
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["n"] == 4);
    CHECK(j["d"] == 2);
    CHECK(j["coordinates"][0]["value"] == "1");
    CHECK(j["coordinates"][1]["value"] == "2");
    CHECK(j["coordinates"][2]["value"] == "3");
}

TEST_CASE("matroid subcommand on the five-element example") {
    CliResult r = run_cli("matroid --input " + data("n5.json"));
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["degree"] == 4);
    CHECK(j["circuits"] == ordered_json::array({"124", "135", "2345"}));
    CHECK(j["broken_circuits"] == ordered_json::array({"12", "13", "234"}));
    CHECK(j["facets"] == ordered_json::array({"145", "235", "245", "345"}));
}

TEST_CASE("chow subcommand emits the matrix and a reparseable determinant") {
    CliResult r = run_cli("chow --input " + data("n5.json") + " --vars beta");
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["k"] == 4);
    REQUIRE(j["matrix"].size() == 4);
    // entry (1,2) of the printed matrix
    CHECK(j["matrix"][0][1] == "b_45");
    MultiPoly det = multipoly_from_json(j["determinant"]);
    CHECK(det.total_degree() == 4);
    CHECK(multipoly_to_json(det) == j["determinant"]);
}

TEST_CASE("entropic subcommand reproduces the printed discriminant") {
    CliResult r = run_cli("entropic --input " + data("ex65.json"));
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["gram"]["entries"][0] == ordered_json::array({"3", "-1", "-1"}));
    CHECK(j["sos_mode"] == "exact");
    MultiPoly det = multipoly_from_json(j["det_normalized"]);
    std::vector<std::string> yv{"y1", "y2"};
    MultiPoly expect(yv);
    expect.add_term({4, 0}, BigRat(45));
    expect.add_term({3, 1}, BigRat(270));
    expect.add_term({2, 2}, BigRat(763));
    expect.add_term({1, 3}, BigRat(1074));
    expect.add_term({0, 4}, BigRat(773));
    CHECK(det == expect);
    CHECK(j["multiplication_traces"][0] == "5/2*y1 + 23/6*y2");
    CHECK(j["multiplication_traces"][1] == "5/2*y1 + 11/3*y2");
}

TEST_CASE("expand and bichow subcommands agree") {
    CliResult r1 = run_cli("expand --n 4 --d 2");
    CliResult r2 = run_cli("bichow --n 4 --d 2");
    REQUIRE(r1.status == 0);
    REQUIRE(r2.status == 0);
    ordered_json j1 = ordered_json::parse(r1.out);
    ordered_json j2 = ordered_json::parse(r2.out);
    CHECK(j1["expansion"] == j2["bichow"]);
    CHECK(j1["expansion"]["terms"].size() == 16);
}

TEST_CASE("bichow with both inputs evaluates the pairing") {
    // Second space chosen through a reciprocal point of the first, so the
    // fully specialized form must vanish.
    std::string m2 = data("tmp_bichow_m.json");
    {
        // (1, 1/2, 1/3, 1/4) is the reciprocal of (1,2,3,4) = row1 + row2
        std::ofstream out(m2);
        out << R"({"rows":2,"cols":4,"entries":[["1","1/2","1/3","1/4"],["0","0","1","5"]]})";
    }
    CliResult r = run_cli("bichow --input " + data("ex65.json") + " --input2 " + m2);
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    MultiPoly p = multipoly_from_json(j["bichow"]);
    CHECK(p.is_zero());
    std::remove(m2.c_str());
}

TEST_CASE("hadamard subcommand, numeric and symbolic") {
    CliResult sym = run_cli("hadamard --n 4 --d 2");
    REQUIRE(sym.status == 0);
    CHECK(ordered_json::parse(sym.out)["surface"]["terms"].size() == 16);

    std::string m2 = data("tmp_hadamard_m.json");
    {
        std::ofstream out(m2);
        out << R"({"rows":2,"cols":4,"entries":[["1","2","-1","3"],["2","-1","1","1"]]})";
    }
    CliResult num = run_cli("hadamard --input " + data("ex65.json") + " --input2 " + m2);
    REQUIRE(num.status == 0);
    ordered_json j = ordered_json::parse(num.out);
    CHECK(j["degree"] == 2);
    std::remove(m2.c_str());
}

TEST_CASE("resultant subcommand") {
    CliResult r = run_cli("resultant --input " + data("resultant_a.json") + " --input2 " +
                          data("resultant_c.json"));
    REQUIRE(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["tree_sum"] == "1");
    CHECK(j["vanishes"] == false);
}

TEST_CASE("verify subcommand exits cleanly") {
    CliResult r = run_cli("verify --suite reality --seed 7");
    CHECK(r.status == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["pass"] == true);
}

TEST_CASE("output is byte-identical across runs") {
    CliResult a = run_cli("chow --input " + data("n5.json") + " --vars gamma --cleared");
    CliResult b = run_cli("chow --input " + data("n5.json") + " --vars gamma --cleared");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    CliResult t = run_cli("matroid --input " + data("n5.json") + " --format text");
    CHECK(t.status == 0);
    CHECK(t.out.find("degree = 4") != std::string::npos);
}

TEST_CASE("error paths use the documented exit codes") {
    CHECK(run_cli("pluecker --input /nonexistent.json").status == 1);

    std::string bad = data("tmp_bad.json");
    {
        std::ofstream out(bad);
        out << "{ not json";
    }
    CHECK(run_cli("pluecker --input " + bad).status == 1);
    std::remove(bad.c_str());

    std::string degenerate = data("tmp_degenerate.json");
    {
        std::ofstream out(degenerate);
        out << R"({"rows":2,"cols":3,"entries":[["1","2","0"],["2","4","0"]]})";
    }
    CHECK(run_cli("pluecker --input " + degenerate).status == 1);
    std::remove(degenerate.c_str());
}
