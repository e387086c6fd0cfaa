#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oba/cli.hpp"

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args, const char* env_seed = nullptr) {
    args.insert(args.begin(), "oba_lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = oba::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err, env_seed);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("witness JSON report") {
    const auto r = invoke({"witness", "--n", "128", "--rule", "trapezoid", "--no-timestamp"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "witness");
    CHECK(doc["passed"] == true);
    const auto& rep = doc["report"];
    for (const char* key : {"n", "rule", "h", "norm_T", "xi_used", "cone_member", "cluster_radius", "deviation",
                            "geq_unit", "norm_excess"}) {
        CHECK_MESSAGE(rep.contains(key), key);
    }
    CHECK(rep["cone_member"] == true);
    CHECK(rep["geq_unit"] == false);
    CHECK(rep["xi_used"] == 1.0);
    CHECK(doc["targets"]["norm_T"]["target"] == 1.0);
    CHECK_FALSE(doc.contains("timestamp"));

    const auto stamped = invoke({"witness", "--n", "8"});
    CHECK(nlohmann::json::parse(stamped.out).contains("timestamp"));
}

TEST_CASE("converge CSV schema") {
    const auto r = invoke({"converge", "--ns", "16,32,64,128,256,512,1024", "--rule", "trapezoid", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,h,norm_T,cluster_radius,deviation,norm_excess");
    int rows = 0;
    std::vector<int> ns;
    while (std::getline(lines, line)) {
        ++rows;
        ns.push_back(std::stoi(line.substr(0, line.find(','))));
        CHECK(std::count(line.begin(), line.end(), ',') == 5);
    }
    CHECK(rows == 7);
    CHECK(ns == std::vector<int>{16, 32, 64, 128, 256, 512, 1024});
}

TEST_CASE("axioms command") {
    const auto r = invoke({"axioms", "--trials", "200", "--seed", "42", "--no-timestamp"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["seed"] == 42);
}

TEST_CASE("determinism and seed fallback") {
    const auto a = invoke({"rigidity", "--trials", "50", "--seed", "7", "--no-timestamp"});
    const auto b = invoke({"rigidity", "--trials", "50", "--seed", "7", "--no-timestamp"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto env = invoke({"rigidity", "--trials", "50", "--no-timestamp"}, "7");
    CHECK(env.out == a.out);
    const auto dflt = invoke({"axioms", "--trials", "20", "--no-timestamp"});
    CHECK(nlohmann::json::parse(dflt.out)["seed"] == 42);
    const auto flag_wins = invoke({"axioms", "--trials", "20", "--seed", "3", "--no-timestamp"}, "9");
    CHECK(nlohmann::json::parse(flag_wins.out)["seed"] == 3);
}

TEST_CASE("growth command") {
    const auto r = invoke({"growth", "--n", "2", "--k-max", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,a_k\n1,0.5\n");

    const auto rejected = invoke({"growth", "--rule", "trapezoid"});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("left-endpoint") != std::string::npos);
    CHECK(invoke({"growth", "--n", "2", "--k-max", "2"}).code == 2);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(invoke({}).code == 2);
    const auto unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(invoke({"witness", "--n", "0"}).code == 2);
    CHECK(invoke({"witness", "--n", "5000"}).code == 2);
    CHECK(invoke({"witness", "--rule", "simpson"}).code == 2);
    CHECK(invoke({"witness", "--format", "xml"}).code == 2);
    CHECK(invoke({"axioms", "--seed", "abc"}).code == 2);
    CHECK(invoke({"axioms", "--trials", "10"}, "not-a-number").code == 2);
    CHECK(invoke({"witness", "--abs-tol", "-1"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("output file") {
    const std::string path = "oba_lab_test_output.csv";
    const auto r = invoke({"witness", "--n", "4", "--format", "csv", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::string header;
    std::getline(file, header);
    CHECK(header.rfind("n,rule,h,norm_T", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("run() reports without writing") {
    oba::cli::RunConfig config;
    config.command = oba::cli::Command::Converge;
    config.ns = {4, 8};
    config.format = oba::cli::OutputFormat::Csv;
    const auto result = oba::cli::run(config);
    CHECK(result.exit_code == 0);
    CHECK(result.report.rfind("n,h,norm_T", 0) == 0);

    config.command = oba::cli::Command::Growth;
    config.rule_given = true;
    CHECK_THROWS_AS(oba::cli::run(config), oba::UsageError);
}
