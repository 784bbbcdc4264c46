#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "towerlab/cli/cli.hpp"
#include "towerlab/scenario/builtin.hpp"

using namespace towerlab;
using scenario::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "towerlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "towerlab-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("verify exits 0 and prints a passing report") {
    Run r = invoke({"verify", "--scenario", "jz-intersection-table", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eps1_hat.x1") != std::string::npos);
}

TEST_CASE("json output parses back into a report with string-valued numbers") {
    Run r = invoke({"verify", "--scenario", "picard-matrices", "--format", "json"});
    REQUIRE(r.code == 0);
    scenario::VerificationReport rep = scenario::report_from_json(json::parse(r.out));
    CHECK(rep.scenario == "picard-matrices");
    CHECK(rep.n == "symbolic");
    CHECK(rep.all_pass());
    CHECK(r.out.find(": 1") == std::string::npos);
}

TEST_CASE("ranges give one report per n") {
    Run r = invoke({"verify", "--scenario", "normal-cone-quadric", "--n", "range:3..5", "--format", "json"});
    REQUIRE(r.code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 3);
    CHECK(arr[2]["n"] == "5");
}

TEST_CASE("the table is independent of n and shows the kernel") {
    Run a = invoke({"table", "--scenario", "jz-intersection-table", "--n", "3"});
    Run b = invoke({"table", "--scenario", "jz-intersection-table", "--n", "4"});
    CHECK(a.code == 0);
    auto body = [](const std::string& s) { return s.substr(s.find('\n')); };
    CHECK(body(a.out) == body(b.out));
    Run k = invoke({"table", "--scenario", "ez-kernel-x2-x3", "--n", "4"});
    CHECK(k.code == 0);
    CHECK(k.out.find("kernel generator: x2 - x3") != std::string::npos);
}

TEST_CASE("the cone view prints a supporting functional") {
    Run r = invoke({"cone", "--scenario", "mori-chain-jz"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3x1 + 2x2 + 2x3 - x4") != std::string::npos);
}

TEST_CASE("list shows every built-in") {
    Run r = invoke({"list"});
    CHECK(r.code == 0);
    for (const auto& s : scenario::list_scenarios()) CHECK(r.out.find(s.name) != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"verify", "--scenario", "jz-intersection-table", "--n", "2"}).code == 2);
    CHECK(invoke({"verify", "--scenario", "nope"}).code == 2);
    CHECK(invoke({"verify", "--bogus"}).code == 2);
    CHECK(invoke({"verify"}).code == 2);
    CHECK(invoke({"verify", "--scenario", "jz-intersection-table", "--n", "abc"}).code == 2);
    CHECK(invoke({"verify", "--file", "/nonexistent/x.json"}).code == 2);
    Run u = invoke({"frobnicate"});
    CHECK(u.code == 2);
    CHECK_FALSE(u.err.empty());
}

TEST_CASE("a failing document exits 1 and a broken one exits 2") {
    json doc = scenario::export_scenario("picard-matrices");
    auto good = scratch("good.json");
    std::ofstream(good) << doc.dump(2);
    CHECK(invoke({"verify", "--file", good.string()}).code == 0);

    doc["expect"][0]["value"] = "wrong";
    auto bad = scratch("bad.json");
    std::ofstream(bad) << doc.dump(2);
    CHECK(invoke({"verify", "--file", bad.string()}).code == 1);

    auto broken = scratch("broken.json");
    std::ofstream(broken) << "{ \"scenario\": ";
    Run r = invoke({"verify", "--file", broken.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("relative output paths resolve against TOWERLAB_REPORT_DIR") {
    auto dir = scratch("reports");
    std::filesystem::create_directories(dir);
    std::filesystem::remove(dir / "out.json");
    setenv("TOWERLAB_REPORT_DIR", dir.c_str(), 1);
    Run r = invoke({"verify", "--scenario", "incidence-fixed-locus", "--format", "json", "--output", "out.json"});
    unsetenv("TOWERLAB_REPORT_DIR");
    CHECK(r.code == 0);
    REQUIRE(std::filesystem::exists(dir / "out.json"));
    std::ifstream f(dir / "out.json");
    CHECK(scenario::report_from_json(json::parse(f)).all_pass());
}

TEST_CASE("export writes a loadable document") {
    auto path = scratch("export.json");
    Run e = invoke({"export", "--scenario", "mori-chain-ez", "--output", path.string()});
    CHECK(e.code == 0);
    CHECK(invoke({"verify", "--file", path.string(), "--n", "6"}).code == 0);
}
