#include "commands.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using conformal::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.begin(), "--no-timing");
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("conformal_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("partition rows") {
    auto r = run({"partition", "--n", "2", "--m", "2", "--method", "gauss"});
    REQUIRE(r.code == 0);
    auto j = r.j();
    CHECK(j["schema"] == conformal::cli::kRecordSchema);
    CHECK(j["row"] == json::array({"1", "1", "2", "1", "1"}));
    CHECK(run({"partition", "--n", "1", "--m", "1"}).j()["row"] == json::array({"1", "1"}));
    for (std::string method : {"dp", "oracle", "gauss", "toeplitz", "closed"}) {
        auto one = run({"partition", "--n", "3", "--m", "4", "--s", "6", "--method", method});
        REQUIRE(one.code == 0);
        CHECK(one.j()["results"][0]["value"] == std::to_string(oracle::conformal(3, 4, 6)));
    }
    auto closed = run({"partition", "--n", "3", "--m", "7", "--method", "closed"}).j();
    for (const auto& res : closed["results"]) CHECK(res.contains("regime"));
}

TEST_CASE("counts are strings and exact") {
    auto j = run({"gauss", "--n", "30", "--m", "30"}).j();
    CHECK(j["sum"] == oracle::binom(60, 30).str());
    CHECK(j["palindromic"] == true);
    CHECK(j["unimodal"] == true);
    CHECK(j["coefficients"][450].is_string());
}

TEST_CASE("mu command") {
    auto j = run({"mu", "--n", "4", "--m", "2"}).j();
    CHECK(j["results"]["R"] == "9");
    CHECK(j["results"]["S"] == "6");
    CHECK(j["results"]["Q"] == "3");
    auto k = run({"mu", "--n", "1", "--m", "5"}).j();
    CHECK(k["results"]["R"] == "3");
    CHECK(k["results"]["S"] == "3");
    auto p = run({"mu", "--pairs", "2,1,2,1", "--check"});
    CHECK(p.code == 0);
    CHECK(p.j()["results"]["R"] == "5");
    CHECK(p.j()["results"]["S"] == "4");
    CHECK(p.j()["results"]["S_count"] == "4");
}

TEST_CASE("roots command") {
    auto a = run({"roots", "--n", "2", "--x", "1,4"}).j();
    CHECK(a["results"]["lambda"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    auto b = run({"roots", "--n", "3", "--x", "1,1,1"}).j();
    CHECK(b["results"]["lambda"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b["results"].contains("bounds_enhanced"));
    auto c = run({"roots", "--n", "4", "--x", "1,4,2,2", "--coeffs", "random:5"}).j();
    CHECK(c["results"]["lambda"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(c["results"]["duality"]["ok"] == true);
    CHECK(run({"roots", "--n", "3", "--x", "1,2"}).code == 1);
    CHECK(run({"roots", "--n", "2", "--x", "1,-2"}).code == 1);
}

TEST_CASE("selfdual round trip through files") {
    auto s = tmp_path("s.json"), r = tmp_path("r.json"), p = tmp_path("p.json");
    REQUIRE(run({"selfdual", "build", "--n", "3", "--m", "1", "--kind", "skew", "--bind", "0,1=1;1,1=1/2", "--out", s}).code == 0);
    REQUIRE(run({"selfdual", "build", "--n", "3", "--m", "1", "--kind", "skew", "--bind", "0,1=2;1,1=3", "--out", r}).code == 0);
    auto m = run({"selfdual", "multiply", "--a", s, "--b", r, "--out", p});
    REQUIRE(m.code == 0);
    CHECK(m.j()["kind"] == "reciprocal");
    auto pr = run({"selfdual", "print", "--in", p});
    CHECK(pr.code == 0);
    CHECK(pr.j()["structure_ok"] == true);
    auto d = run({"selfdual", "dualcheck", "--in", p, "--x", "0.5,2,3", "--lambda", "1.3"});
    CHECK(d.code == 0);
    CHECK(d.j()["results"]["ok"] == true);
    auto sym = run({"selfdual", "build", "--n", "4", "--m", "2", "--kind", "reciprocal"}).j();
    CHECK(sym["mu"] == 9);
    CHECK(run({"selfdual", "print", "--in", tmp_path("missing.json")}).code == 1);
    for (const auto& f : {s, r, p}) std::remove(f.c_str());
}

TEST_CASE("groups command") {
    auto j = run({"groups"}).j();
    for (const auto& g : j["results"]) CHECK(g["agrees"] == true);
    auto one = run({"groups", "--name", "I_{2,5}"}).j();
    CHECK(one["results"][0]["computed"] == "does_not");
    CHECK(run({"groups", "--name", "E_8"}).code == 1);
}

TEST_CASE("verify is deterministic across thread counts") {
    auto a = run({"verify", "--max-n", "5", "--max-m", "6"});
    auto b = run({"verify", "--max-n", "5", "--max-m", "6", "--threads", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto g = run({"verify", "--suite", "groups"}).j();
    CHECK(g["results"][0]["table"].size() > 20);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"partition", "--n", "2"}).code == 1);
    CHECK(run({"partition", "--n", "2", "--m", "2", "--method", "magic"}).code == 1);
    CHECK(run({"verify", "--suite", "nope"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    setenv("CONFORMAL_ORACLE_CEILING", "10", 1);
    CHECK(run({"partition", "--n", "8", "--m", "8", "--s", "32", "--method", "oracle"}).code == 3);
    unsetenv("CONFORMAL_ORACLE_CEILING");
}

TEST_CASE("csv output") {
    auto r = run({"--csv", "partition", "--n", "2", "--m", "1"});
    CHECK(r.out == "n,m,s,value,method\n2,1,0,1,dp\n2,1,1,1,dp\n2,1,2,1,dp\n");
}
