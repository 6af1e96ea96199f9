#include <cmath>
#include <hrl/cli.hpp>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run hrl_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = hrl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string & name) { return (std::filesystem::temp_directory_path() / name).string(); }

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("bounds eval reports thresholds and windows")
    {
        auto ok = hrl_run({"bounds", "eval", "--theorem", "1.1b", "--k", "3", "--n", "12"});
        CHECK(ok.code == 0);
        auto j = nlohmann::json::parse(ok.out);
        CHECK(j["threshold"] == "9");
        CHECK(j["window_ok"] == true);
        auto out = hrl_run({"bounds", "eval", "--theorem", "4.1", "--k", "3", "--n", "10", "--eps", "0.1"});
        CHECK(out.code == 1);
        CHECK(nlohmann::json::parse(out.out)["window_ok"] == false);
    }

    TEST_CASE("usage errors exit with 2")
    {
        CHECK(hrl_run({}).code == 2);
        CHECK(hrl_run({"frobnicate"}).code == 2);
        CHECK(hrl_run({"mc", "--graph", tmp("does_not_exist.txt"), "--coloring", tmp("nope.txt")}).code == 2);
        CHECK(hrl_run({"bounds", "eval", "--theorem", "9.9"}).code == 2);
        CHECK(hrl_run({"--help"}).code == 0);
    }

    TEST_CASE("generate then compute mc")
    {
        auto graph = tmp("hrl_cli_ext.txt"), coloring = tmp("hrl_cli_ext_col.txt");
        auto gen = hrl_run({"gen", "extremal-comp", "--k", "3", "--n", "8", "--out", graph, "--coloring-out", coloring});
        REQUIRE(gen.code == 0);
        auto mc = hrl_run({"mc", "--graph", graph, "--coloring", coloring});
        CHECK(mc.code == 0);
        CHECK(nlohmann::json::parse(mc.out)["value"] == 6);
        auto search = hrl_run({"mc-search", "--graph", graph, "--r", "4", "--restarts", "3", "--seed", "2"});
        CHECK(search.code == 0);
        CHECK(nlohmann::json::parse(search.out)["value"] >= 6);
    }

    TEST_CASE("exact search writes a certificate in file order")
    {
        auto graph = tmp("hrl_cli_k35.txt"), cert = tmp("hrl_cli_k35_cert.txt");
        REQUIRE(hrl_run({"gen", "complete", "--k", "3", "--n", "5", "--out", graph}).code == 0);
        auto exact = hrl_run({"mc-exact", "--graph", graph, "--r", "3", "--coloring-out", cert});
        CHECK(exact.code == 0);
        CHECK(nlohmann::json::parse(exact.out)["value"] == 5);
        auto check = hrl_run({"mc", "--graph", graph, "--coloring", cert});
        CHECK(nlohmann::json::parse(check.out)["value"] == 5);
    }

    TEST_CASE("cycle longest on the extremal cycle coloring")
    {
        auto graph = tmp("hrl_cli_cyc.txt"), coloring = tmp("hrl_cli_cyc_col.txt");
        REQUIRE(hrl_run({"gen", "extremal-cycle", "--k", "3", "--n", "10", "--out", graph, "--coloring-out", coloring})
                    .code
            == 0);
        auto red = hrl_run({"cycle", "longest", "--graph", graph, "--coloring", coloring, "--color", "1", "--exact"});
        CHECK(red.code == 0);
        CHECK(nlohmann::json::parse(red.out)["vertices"] == 8);
    }

    TEST_CASE("regularity audit and refine")
    {
        auto graph = tmp("hrl_cli_kp.txt"), parts = tmp("hrl_cli_kp_parts.txt");
        REQUIRE(hrl_run({"gen", "kpartite", "--k", "3", "--n", "4", "--p", "1", "--out", graph, "--partition-out", parts})
                    .code
            == 0);
        auto audit = hrl_run({"regularity", "audit", "--graph", graph, "--partition", parts, "--eps", "0.2", "--p",
            "1", "--budget", "5000"});
        CHECK(audit.code == 0);
        auto j = nlohmann::json::parse(audit.out);
        CHECK(j["tuples"].size() == 1);
        CHECK(j["tuples"][0]["dp"] == 1.0);
    }

    TEST_CASE("experiment output is byte-identical for 1 and 8 shards")
    {
        std::vector<std::string> base{"experiment", "--k", "3", "--n", "16", "--n", "20", "--p", "0.4", "--trials",
            "5", "--seed", "7"};
        auto one = base, eight = base;
        one.insert(one.begin(), {"--shards", "1"});
        eight.insert(eight.begin(), {"--shards", "8"});
        auto a = hrl_run(one), b = hrl_run(eight);
        CHECK(a.out == b.out);
        CHECK(a.out.find("schema=1") != std::string::npos);
    }
}
