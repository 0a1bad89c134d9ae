#include <sstream>

#include <gtest/gtest.h>

#include "boolsum/cli.hpp"

using boolsum::cli::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = boolsum::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    const auto o = run(std::move(args));
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

}  // namespace

TEST(Cli, SumWithOracle) {
    const auto j = run_json({"sum", "--degrees", "3,5", "--n", "5", "--oracle"});
    EXPECT_EQ(j["command"], "sum");
    EXPECT_EQ(j["result"]["value"], 10);
    EXPECT_EQ(j["result"]["oracle"], 10);
    EXPECT_EQ(j["result"]["match"], true);
    EXPECT_EQ(j["result"]["correlation"], "5/16");
    EXPECT_EQ(j["degrees"], json::array({"3", "5"}));
    EXPECT_EQ(j["version"], boolsum::cli::kVersion);
}

TEST(Cli, LargeValuesBecomeStrings) {
    const auto j = run_json({"sum", "-k", "3,5", "--n", "200"});
    EXPECT_TRUE(j["result"]["value"].is_string());
    EXPECT_EQ(j["result"]["value"].get<std::string>(), boolsum::exp_sum(200, {3, 5}).get_str());
}

TEST(Cli, Recurrence) {
    const auto j = run_json({"recurrence", "--degrees", "3,5", "--verify", "60"});
    const auto& r = j["result"];
    EXPECT_EQ(r["minimal"]["degree"], 5);
    EXPECT_EQ(r["recurrence"]["coefficients"], json::array({6, -14, 16, -10, 4}));
    EXPECT_EQ(r["recurrence"]["valid_from"], 6);
    EXPECT_EQ(r["verify"]["ok"], true);
    EXPECT_EQ(r["bounds"]["lower"], 4);
    EXPECT_EQ(r["bounds"]["upper"], 7);

    const auto full = run_json({"recurrence", "-k", "7", "--full"});
    EXPECT_EQ(full["result"]["full"]["recurrence"]["coefficients"], json::array({8, -28, 56, -70, 56, -28, 8}));
}

TEST(Cli, C0WithHugeDegrees) {
    const auto j = run_json({"c0", "--degrees", "31,2^10000+64,2^10000+32+128"});
    EXPECT_EQ(j["result"]["c0"], "15/32");
    EXPECT_EQ(j["result"]["c0_relabeled_enumeration"], "15/32");
    EXPECT_EQ(j["degrees"][1], "2^10000+64");

    const auto nested = run_json({"c0", "-k", "10,14"});
    EXPECT_EQ(nested["result"]["nested"], true);
    EXPECT_EQ(nested["result"]["c0_nested"], nested["result"]["c0"]);
}

TEST(Cli, ErrorTableDefaultsToCsv) {
    const auto o = run({"error-table", "--degrees", "5,9,12", "--rows", "100,200", "--digits", "12"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "n,error\n100,1.53058209758e-3\n200,-1.60776038707e-6\n");

    const auto j = run_json({"--format", "json", "error-table", "-k", "5,9,12", "--rows", "100"});
    EXPECT_EQ(j["result"]["rows"][0]["n"], 100);
}

TEST(Cli, AsymReportsError) {
    const auto j = run_json({"asym", "-k", "5,9,12", "--n", "100", "--digits", "10"});
    EXPECT_EQ(j["result"]["c0"], "0");
    EXPECT_EQ(j["result"]["error"], "1.530582098e-3");
    EXPECT_EQ(j["precision"], 1024);
    const auto k = run_json({"asym", "-k", "3,5", "--n", "40"});
    EXPECT_FALSE(k["result"].contains("error"));
}

TEST(Cli, BalancedCsv) {
    const auto o = run({"--format", "csv", "balanced", "-k", "2", "--max-n", "20"});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "n\n3\n7\n11\n15\n19\n");
}

TEST(Cli, FlatCsvForReports) {
    const auto o = run({"--format", "csv", "c0", "-k", "3,5"});
    ASSERT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("c0,1/2\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"c0", "--degrees", "3,3"}).code, 2);
    EXPECT_EQ(run({"c0", "--degrees", "0"}).code, 2);
    EXPECT_EQ(run({"c0", "--degrees", "a"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"sum", "-k", "3"}).code, 2);  // missing --n
    EXPECT_EQ(run({"asym", "-k", "1", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"asym", "-k", "3,5", "--n", "3", "--precision", "10"}).code, 2);
    EXPECT_EQ(run({"sum", "-k", "3", "--n", "40", "--oracle"}).code, 3);
    EXPECT_EQ(run({"recurrence", "-k", "2^30"}).code, 3);
    EXPECT_EQ(run({"error-table", "-k", "5,9,12", "--rows", "5000", "--precision", "256"}).code, 3);
    const auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("error-table"), std::string::npos);
    EXPECT_EQ(run({"--version"}).out, std::string(boolsum::cli::kVersion) + "\n");
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"recurrence", "-k", "6,17", "--verify", "100"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> table{"error-table", "-k", "2,4,11,35", "--rows", "250,500", "--precision", "2048"};
    EXPECT_EQ(run(table).out, run(table).out);
}

TEST(Cli, JsonRoundTrip) {
    const auto o = run({"recurrence", "-k", "3,5,17"});
    const auto j = json::parse(o.out);
    EXPECT_EQ(j.dump(2) + "\n", o.out);
    EXPECT_EQ(j["result"]["minimal"]["levels"], json::array({4}));
    EXPECT_EQ(j["arguments"], json::array({"recurrence", "-k", "3,5,17"}));
}
