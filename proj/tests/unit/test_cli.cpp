#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "densepart/graph.hpp"
#include "densepart/oracle.hpp"

namespace fs = std::filesystem;
using densepart::cli::dispatch;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
#ifdef DENSEPART_TEST_TMPDIR
    const fs::path dir = DENSEPART_TEST_TMPDIR;
#else
    const fs::path dir = fs::temp_directory_path() / "densepart_cli";
#endif
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct BudgetEnv {
    explicit BudgetEnv(const char* v) { ::setenv("DENSEPART_BUDGET", v, 1); }
    ~BudgetEnv() { ::unsetenv("DENSEPART_BUDGET"); }
};

}  // namespace

TEST_CASE("approx on an edge-list file emits the result object") {
    const auto path = scratch("k4.el");
    std::ofstream(path) << "5 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    const auto r = run({"approx", "--graph", path.string(), "--m", "4", "--alpha", "0.2", "--order", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"mode", "n", "m", "gamma", "alpha", "order_used", "ln_den", "certified_density",
                            "error_bound", "budget_limited"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["mode"] == "direct");
    CHECK(j["n"] == 5);
    CHECK(j["order_used"] == 3);
    CHECK(j["alpha"].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("exact matches the oracle") {
    const auto r = run({"exact", "--gen", "gnp:10:0.5:7", "--m", "4", "--gamma", "0.5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto g = densepart::random_gnp(10, 0.5, 7);
    CHECK(j["ln_den"].get<double>() == densepart::den_exact(g, 4, 0.5));
}

TEST_CASE("extract returns 1-based vertices") {
    const auto path = scratch("planted.el");
    std::ofstream(path) << "8 6\n5 6\n5 7\n5 8\n6 7\n6 8\n7 8\n";
    const auto r = run({"extract", "--graph", path.string(), "--m", "4", "--gamma", "1", "--engine", "exact"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["subset"]["vertices"] == nlohmann::json::array({5, 6, 7, 8}));
    CHECK(j["subset"]["density"] == 1.0);
}

TEST_CASE("params, check-identity and sweep") {
    auto p = run({"params", "--delta", "0.1", "--m", "4", "--gamma", "0.05"});
    REQUIRE(p.code == 0);
    auto pj = nlohmann::json::parse(p.out);
    CHECK(pj["rho"].get<double>() == doctest::Approx(0.005));

    auto c = run({"check-identity", "--n", "4", "--m", "2", "--radius", "1"});
    REQUIRE(c.code == 0);
    auto cj = nlohmann::json::parse(c.out);
    CHECK(cj["rhs"].get<double>() == doctest::Approx(7.0 / 6.0));

    auto s = run({"sweep", "--n", "8", "--seeds", "1:3", "--m", "3", "--alpha", "0.2", "--orders", "1,2", "--format", "csv"});
    REQUIRE(s.code == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 7);
}

TEST_CASE("zeros writes CSV and summary") {
    const auto csv = scratch("zeros.csv"), summary = scratch("zeros_summary.json");
    const auto r = run({"zeros", "--n", "10", "--m", "3", "--r", "1", "--tau", "2", "--trials", "5", "--seed", "1",
                        "--output", csv.string(), "--summary", summary.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto text = slurp(csv);
    CHECK(text.rfind("trial", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    const auto sj = nlohmann::json::parse(slurp(summary));
    CHECK(sj["trials"] == 5);
    CHECK(sj["threshold_n"] == 150.0);
}

TEST_CASE("validation errors exit with 1 and a one-line message") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"approx", "--gen", "gnp:10:0.5:1", "--m", "4", "--gamma", "0.5", "--alpha", "0.2"},
             {"frobnicate"},
             {"approx", "--graph", "/nonexistent/graph.el", "--m", "4", "--alpha", "0.2"},
             {"approx", "--gen", "gnp:10:0.5:1", "--m", "40", "--alpha", "0.2"},
             {"approx", "--gen", "gnp:10:1.5:1", "--m", "4", "--alpha", "0.2"},
             {"approx", "--gen", "nope", "--m", "4", "--alpha", "0.2"},
             {"approx", "--m", "4", "--alpha", "0.2"},
             {"params", "--delta", "1.5", "--m", "4"},
             {}}) {
        const auto r = run(args);
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    const auto path = scratch("bad.el");
    std::ofstream(path) << "3 1\n1 1\n";
    const auto r = run({"exact", "--graph", path.string(), "--m", "2", "--gamma", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("budget failures exit with 2") {
    BudgetEnv env("100");
    const auto r = run({"exact", "--gen", "gnp:20:0.5:1", "--m", "5", "--gamma", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("DENSEPART_BUDGET") != std::string::npos);
    BudgetEnv bad("zero");
    CHECK(run({"exact", "--gen", "gnp:8:0.5:1", "--m", "3", "--gamma", "1"}).code == 1);
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::vector<std::vector<std::string>> cases{
        {"--threads", "1", "approx", "--gen", "gnp:10:0.5:3", "--m", "4", "--alpha", "0.2", "--order", "5"},
        {"--threads", "1", "zeros", "--n", "12", "--m", "3", "--r", "1", "--tau", "2", "--trials", "10", "--seed", "4",
         "--format", "json"},
        {"--threads", "1", "sweep", "--n", "9", "--seeds", "1,2", "--m", "4", "--alpha", "0.1,0.3", "--orders", "1,3"},
    };
    for (const auto& args : cases) {
        const auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto x = run({"--threads", "3", "zeros", "--n", "12", "--m", "3", "--r", "1", "--tau", "2", "--trials", "10",
                        "--seed", "4", "--format", "json"});
    CHECK(x.out == run(cases[1]).out);
}
