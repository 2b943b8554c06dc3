#include <doctest.h>

#include "innc/cli.hpp"
#include "innc/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace innc;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "innc");
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool has(const std::string &text, const std::string &needle) {
    return text.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("faces of the cone over (2,3)") {
    const auto r = run({"faces", "--cone", "2,3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "1 face of quasiadjunction"));
    // levels 2, 1, 0 appear one bound at a time
    CHECK(has(r.out, "stabilization: bound 1 changes the faces; raise --bound"));
    CHECK(r.err.empty());
    const auto stable = run({"faces", "--cone", "2,3", "--bound", "2"});
    CHECK(has(stable.out, "3 faces of quasiadjunction"));
    CHECK(has(stable.out, "stabilization: faces unchanged at bound 3"));
}

TEST_CASE("faces of an input document") {
    const auto doc = temp_file("innc_cli_doc.json", R"({"r": 2, "n": 2, "components": ["A", "B"],
        "exceptional": [{"id": "E", "a": [2, 3], "c": 1}]})");
    const auto r = run({"faces", "--input", doc.string()});
    CHECK(r.code == 0);
    CHECK(has(r.out, "stabilization: not checked"));
    std::filesystem::remove(doc);
}

TEST_CASE("malformed documents exit with 1 and name the field") {
    const auto doc = temp_file("innc_cli_bad.json", R"({"r": 1, "n": 2, "components": ["D"],
        "exceptional": [{"id": "E", "a": [1]}]})");
    const auto r = run({"faces", "--input", doc.string()});
    CHECK(r.code == 1);
    CHECK(has(r.err, "exceptional[0].c"));
    std::filesystem::remove(doc);

    const auto missing = run({"faces", "--input", "/nonexistent/innc.json"});
    CHECK(missing.code == 1);
    CHECK(has(missing.err, "cannot read"));
}

TEST_CASE("components of the cyclic cone") {
    const auto r = run({"components", "--cone", "5", "--n", "3", "--bound", "1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "2 principal components (f-values: principal lower bound)"));
    CHECK(has(r.out, "t1 = exp(2 pi i 1/5)"));
    CHECK(has(r.out, "nonessential: none"));
    CHECK(has(r.out, "polynomial invariant:"));
}

TEST_CASE("components of four planes") {
    const auto r = run({"components", "--arrangement", "4"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "t1 t2 t3 t4 = 1"));
    CHECK(has(r.out, "polynomial invariant: t1 t2 t3 t4 - 1"));
}

TEST_CASE("betti table of four planes") {
    const auto r = run({"betti", "--arrangement", "4", "--m", "3,3,3,3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "f-values: exact (oracle)"));
    CHECK(has(r.out, "characters summed: 81"));
    CHECK(has(r.out, "2       29"));
    CHECK(has(r.out, "trivial character summand: 3"));

    const auto s = run({"betti", "--arrangement", "4", "--m", "3,3,3,3", "--format", "structured"});
    CHECK(s.code == 0);
    const auto doc = Json::parse(s.out);
    CHECK(doc["command"] == "betti");
    CHECK(doc["table"]["ranks"] == Json({1, 4, 29}));
    CHECK(doc["table"]["characters"] == 81);
    CHECK(doc["input"]["r"] == 4);
}

TEST_CASE("betti needs branching orders") {
    CHECK(run({"betti", "--arrangement", "4"}).code == 1);
    CHECK(run({"betti", "--arrangement", "4", "--m", "3,3"}).code == 1);
    CHECK(run({"betti", "--arrangement", "2", "--m", "1000,1000", "--cap", "100"}).code == 1);
}

TEST_CASE("branched covers of input documents need sub-unions") {
    const auto doc = temp_file("innc_cli_branched.json", R"({"r": 2, "n": 2, "components": ["A", "B"],
        "exceptional": [{"id": "E", "a": [2, 3], "c": 1}]})");
    const auto r = run({"betti", "--input", doc.string(), "--m", "2,2", "--branched"});
    CHECK(r.code == 1);
    CHECK(has(r.err, "--subunions"));

    const auto subs = temp_file("innc_cli_subs.json", R"({"subunions": [
        {"components": [1], "principal_components": []},
        {"components": [2], "principal_components": []},
        {"components": [1, 2], "principal_components": [{"equations": [{"v": [2, 3]}]}]}]})");
    const auto ok = run({"betti", "--input", doc.string(), "--m", "2,2", "--branched",
                         "--subunions", subs.string()});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "mode: branched"));
    std::filesystem::remove(doc);
    std::filesystem::remove(subs);
}

TEST_CASE("milnor fiber of four planes") {
    const auto r = run({"milnor", "--arrangement", "4", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "(eigenvalue 1 not included)"));
    CHECK(has(r.out, "j = 1..3: 1 1 1"));
    CHECK(has(r.out, "(t + 1) (t^2 + 1)"));
    CHECK(has(r.out, "multiplicity of t - 1: unresolved"));
    CHECK(run({"milnor", "--arrangement", "4"}).code == 1);
}

TEST_CASE("oracle and check") {
    const auto o = run({"oracle", "--arrangement", "4", "--order", "3"});
    CHECK(o.code == 0);
    CHECK(has(o.out, "81 characters, 27 in the support"));

    const auto c = run({"check", "--arrangement", "4", "--order", "2"});
    CHECK(c.code == 0);
    CHECK(has(c.out, "support: 16/16 characters agree"));
    CHECK(has(c.out, "check passed"));

    const auto big = run({"check", "--arrangement", "3", "--order", "4"});
    CHECK(big.code == 0);
    CHECK(has(big.out, "support: 64/64 characters agree"));

    // four lines at bound 0: the germ basis is too small for the principal
    // components to reach f = 2, so the check reports a disagreement
    const auto shallow = run({"check", "--arrangement", "4", "--n", "1", "--order", "2"});
    CHECK(shallow.code == 2);
    CHECK(has(shallow.out, "f-values (nontrivial, on support): 0/7 characters agree"));
    CHECK(has(shallow.out, "check FAILED"));
    CHECK(run({"check", "--arrangement", "4", "--n", "1", "--order", "2", "--bound", "2"}).code == 0);

    const auto cone = run({"check", "--cone", "2,3", "--order", "2"});
    CHECK(cone.code == 1);
    CHECK(has(cone.err, "oracle unavailable"));
}

TEST_CASE("input selection") {
    CHECK(run({"faces"}).code == 1);
    CHECK(run({"faces", "--cone", "2,3", "--arrangement", "3"}).code == 1);
    CHECK(run({"faces", "--cone", "2,3", "--n", "0"}).code == 1);
    CHECK(run({"faces", "--cone", "2,3", "--bound", "-1"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"faces", "--cone", "2,3", "--format", "xml"}).code == 1);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "innc_cli_out.txt";
    std::filesystem::remove(path);
    const auto r = run({"faces", "--cone", "2,3", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"faces", "--cone", "2,3"}).out);
    std::filesystem::remove(path);
}

TEST_CASE("structured output is reproducible") {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"faces", "--cone", "2,3", "--format", "structured"},
          std::vector<std::string>{"components", "--arrangement", "4", "--format", "structured"},
          std::vector<std::string>{"milnor", "--cone", "2,3", "--order", "6", "--format",
                                   "structured"}}) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK_NOTHROW((void)Json::parse(a.out));
    }
}
