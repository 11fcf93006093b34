#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyplab/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using hyplab::cli::dispatch;
using hyplab::cli::parse_scalar_fn;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("scalar function expressions") {
    CHECK(parse_scalar_fn("const:0.5")(3.0) == 0.5);
    CHECK(parse_scalar_fn("poly:1,2,3")(2.0) == doctest::Approx(1 + 4 + 12));
    CHECK(parse_scalar_fn("sin:2,1,0,0.5")(0.0) == doctest::Approx(0.5));
    CHECK(parse_scalar_fn("sin:2,1,0,0.5")(M_PI / 2) == doctest::Approx(2.5));
    CHECK_THROWS_AS((void)parse_scalar_fn("exp:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_scalar_fn("sin:1"), std::invalid_argument);
}

TEST_CASE("invariants subcommand") {
    const auto res = run({"invariants", "--c", "-1", "--alpha", "2", "--beta", "0", "--lambda",
                          "1", "--mu", "0", "--nu", "1"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j["rho_star"].get<double>() == doctest::Approx(-6.0));
    CHECK(j["rho_star_half"].get<double>() == doctest::Approx(-3.0));
    CHECK(j["hopf_residual"].get<double>() == doctest::Approx(0.0));
    CHECK(j["ricci"].size() == 3);
}

TEST_CASE("classify subcommand") {
    const auto res = run({"classify", "--c", "1", "--alpha", "0.3", "--beta", "1.2"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j["ruled"].get<bool>());
    CHECK_FALSE(j["hopf"].get<bool>());
    CHECK(j["star_scalar_half"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("catalog subcommand") {
    const auto res =
        run({"catalog", "--kind", "B", "--alpha", "-4", "--c", "1", "--n", "2"});
    REQUIRE(res.code == 0);
    const json j = json::parse(res.out);
    CHECK(j["rho_star"].get<double>() == doctest::Approx(6.0));
    CHECK(j["star_einstein"].get<bool>());
    CHECK(j["wperp_curvatures"].size() == 2);

    CHECK(run({"catalog", "--kind", "A0", "--alpha", "1", "--c", "1"}).code == 1);
}

TEST_CASE("construct pseudo-ryan writes a constraint-clean CSV") {
    const std::string path = "/tmp/hyplab_test_pr.csv";
    const auto res = run({"construct", "pseudo-ryan", "--c", "-1", "--alpha", "1.5", "--beta",
                          "1", "--lambda", "2", "--nu", "1", "--t1", "0.1", "--dt", "1e-3",
                          "--out", path});
    REQUIRE(res.code == 0);
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(line == "t,alpha,beta,lambda,nu,constraint_residual,rho_star_half");
    int rows = 0;
    while (std::getline(f, line)) {
        const auto p1 = line.rfind(',');
        const auto p0 = line.rfind(',', p1 - 1);
        const double resid = std::stod(line.substr(p0 + 1, p1 - p0 - 1));
        CHECK(std::abs(resid) <= 1e-8);
        ++rows;
    }
    CHECK(rows == 101);
    std::remove(path.c_str());
}

TEST_CASE("construct ode with a sinusoidal nu") {
    const std::string path = "/tmp/hyplab_test_ode.csv";
    const auto res = run({"construct", "ode", "--c", "-1", "--alpha", "1.375", "--beta",
                          "0.6495190528383290", "--lambda", "0.125", "--nu-fn", "const:0.5",
                          "--t1", "0.5", "--out", path});
    REQUIRE(res.code == 0);
    CHECK(slurp(path).find("rho_star_half") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("curve subcommand emits frame CSV") {
    const std::string path = "/tmp/hyplab_test_curve.csv";
    const auto res = run({"curve", "--c", "1", "--k1", "sin:1,1,0,0", "--t1", "0.2", "--out",
                          path});
    REQUIRE(res.code == 0);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header.substr(0, 9) == "t,re_f10,");
    std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
    SUBCASE("single suite passes with exit 0") {
        const auto res = run({"verify", "--suite", "oracles", "--seed", "7", "--samples",
                              "50"});
        CHECK(res.code == 0);
        const json j = json::parse(res.out);
        CHECK(j["pass"].get<bool>());
        CHECK(j["suites"][0]["suite"] == "oracles");
    }
    SUBCASE("identical config gives identical bytes") {
        const std::vector<std::string> args = {"verify", "--suite", "berndt", "--seed", "42",
                                               "--samples", "60"};
        CHECK(run(args).out == run(args).out);
    }
    SUBCASE("all suites aggregate to exit 0") {
        const auto res = run({"verify", "--suite", "all", "--seed", "42", "--samples", "30"});
        CHECK(res.code == 0);
        const json j = json::parse(res.out);
        CHECK(j["suites"].size() == 8);
        CHECK(j["pass"].get<bool>());
    }
    SUBCASE("HYPLAB_SEED is the fallback seed") {
        setenv("HYPLAB_SEED", "123", 1);
        const auto res = run({"verify", "--suite", "oracles", "--samples", "10"});
        unsetenv("HYPLAB_SEED");
        CHECK(json::parse(res.out)["suites"][0]["seed"].get<std::uint64_t>() == 123);
    }
    SUBCASE("unknown suite fails") {
        CHECK(run({"verify", "--suite", "bogus"}).code == 1);
    }
}

TEST_CASE("bad flags are reported") {
    CHECK(run({"invariants"}).code == 1);            // missing --c
    CHECK(run({"unknown-subcommand"}).code == 1);
    CHECK(run({}).code == 1);
}
