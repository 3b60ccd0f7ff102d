#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ccount/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "ccount");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = ccount::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    auto p = fs::temp_directory_path() / ("ccount_test_" + name);
    std::ofstream(p) << content;
    return p;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> cells(const std::string& row) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(row);
    while (std::getline(in, cell, '\t')) out.push_back(cell);
    if (!row.empty() && row.back() == '\t') out.emplace_back();
    return out;
}

const std::string data_dir = CCOUNT_DATA_DIR;

}  // namespace

TEST_CASE("check") {
    auto pass = run({"check", "(x/y)/z", "y", "z", "--goal", "x"});
    CHECK(pass.code == 0);
    CHECK(pass.out == "x: +1 (expected +1)\ny: 0 (expected 0)\nz: 0 (expected 0)\nPASS\n");

    auto fail = run({"check", "x/y", "z", "--goal", "x"});
    CHECK(fail.code == 1);
    CHECK(fail.out == "x: +1 (expected +1)\ny: -1 (expected 0) *\nz: +1 (expected 0) *\nFAIL\n");

    CHECK(run({"check", "x", "--goal", "x"}).code == 0);
    CHECK(run({"check", "x"}).code == 1);  // default goal s
}

TEST_CASE("usage errors exit 2") {
    auto bad = run({"check", "x/(y", "--goal", "x"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("column 3") != std::string::npos);
    CHECK(run({"check", "x", "--goal", "x/y"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"registers", "x", "--side", "middle"}).code == 2);
    CHECK(run({"filter", "--lexicon", "/nonexistent/lexicon", "a", "&", "a"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("registers") {
    auto l = run({"registers", "x", "--side", "left"});
    CHECK(l.code == 0);
    CHECK(l.out == "x: <0,0,1,0>\nOk\n");

    auto r = run({"registers", "x", "y\\x", "--side", "right"});
    CHECK(r.code == 0);
    CHECK(r.out == "x: <0,1,0,0>\ny: <0,0,1,0>\nOk\n");

    auto f = run({"registers", "x\\y", "y", "--side", "left"});
    CHECK(f.code == 1);
    CHECK(lines(f.out).back() == "Fail FreeLeftwardArgInLeft: y at token 0");
}

TEST_CASE("filter on the trivial coordination") {
    auto lex = temp_file("a.lex", "a\tx\n");
    auto res = run({"filter", "--lexicon", lex.string(), "--goal", "x", "--oracle", "on", "a", "&", "a"});
    REQUIRE(res.code == 0);
    auto ls = lines(res.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1] == "3\t1.0e0\t1.0e0\t1.0e2\t1\t1.0e2\t1.0e2\t1\t");

    auto j = run({"filter", "--lexicon", lex.string(), "--goal", "x", "--format", "json", "--sentence", "a & a"});
    REQUIRE(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["stats"]["pa"] == "1");
    CHECK(parsed["stats"]["aa"] == 1);
    CHECK(parsed["oracle_confirmed"].is_null());

    CHECK(run({"filter", "--lexicon", lex.string(), "a", "a"}).code == 2);
    CHECK(run({"filter", "--lexicon", lex.string(), "a", "&", "a", "&", "a"}).code == 2);
    CHECK(run({"filter", "--lexicon", lex.string(), "&", "a"}).code == 2);
    CHECK(run({"filter", "--lexicon", lex.string(), "a", "&", "b"}).code == 2);
    fs::remove(lex);
}

TEST_CASE("filter truncation is flagged, not an error") {
    auto lex = temp_file("cap.lex", "a\tx,y,z\nb\tx,y\n");
    auto res = run({"filter", "--lexicon", lex.string(), "--cap", "1", "a", "b", "&", "a", "b"});
    REQUIRE(res.code == 0);
    CHECK(cells(lines(res.out)[1]).back() == "truncated-left,truncated-right");
    fs::remove(lex);
}

TEST_CASE("filter on a pair whose every assignment violates the invariant") {
    auto res = run({"filter", "--lexicon", data_dir + "/coord_examples.lex", "--goal", "z", "a", "d", "&", "d", "e", "f"});
    REQUIRE(res.code == 0);
    auto c = cells(lines(res.out)[1]);
    CHECK(c[2] == "1.0e0");
    CHECK(c[4] == "0");
}

TEST_CASE("bench") {
    auto two = run({"bench", "--lexicon", data_dir + "/coord_examples.lex", "--goal", "z", "--oracle", "on", "--sentences",
                    data_dir + "/coord_examples.txt"});
    REQUIRE(two.code == 0);
    auto ls = lines(two.out);
    REQUIRE(ls.size() == 4);
    auto pos = cells(ls[1]);
    auto neg = cells(ls[2]);
    CHECK(pos[4] == "1");
    CHECK(pos[7] == "1");
    CHECK(neg[4] == "0");
    CHECK(neg[7] == "0");
    CHECK(ls[3].rfind("# sentences=2 total_ms=", 0) == 0);

    auto empty = temp_file("empty.txt", "");
    auto e = run({"bench", "--lexicon", data_dir + "/coord_examples.lex", "--sentences", empty.string()});
    CHECK(e.code == 0);
    CHECK(lines(e.out).size() == 2);

    auto broken = temp_file("broken.txt", "a b & b c\n# comment\n\nq & b\na b c\n");
    auto b = run({"bench", "--lexicon", data_dir + "/coord_examples.lex", "--goal", "z", "--sentences", broken.string()});
    CHECK(b.code == 1);
    auto bl = lines(b.out);
    REQUIRE(bl.size() == 5);
    CHECK(cells(bl[2]).back().rfind("error: ", 0) == 0);
    CHECK(cells(bl[3]).back().rfind("error: ", 0) == 0);
    fs::remove(empty);
    fs::remove(broken);

    CHECK(run({"bench", "--lexicon", data_dir + "/coord_examples.lex", "--sentences", "/nonexistent"}).code == 2);
}

TEST_CASE("oracle subcommand") {
    auto yes = run({"oracle", "--left", "x/y y", "--right", "y z\\x", "--goal", "z"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("conjoinable: yes") != std::string::npos);
    CHECK(yes.out.find("witness: Y'=[x/y] C1=[y] C2=[y] Z'=[z\\x] c=y") != std::string::npos);

    auto no = run({"oracle", "--left", "x/y y/u", "--right", "y/u u z\\x\\u", "--goal", "z"});
    CHECK(no.code == 1);
    CHECK(no.out.find("conjoinable: no") != std::string::npos);
    CHECK(no.out.find("u: λ=-1 ρ=-1 violated=[NegLambdaVsSatheadL]") != std::string::npos);
    CHECK(no.out.find("derivable: no") != std::string::npos);

    CHECK(run({"oracle", "--left", "", "--right", "x"}).code == 2);
}
