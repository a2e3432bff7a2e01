#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace apart;
using apart::cli::run_cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string &s)
{
    auto t = s.substr(0, s.find_last_not_of('\n') + 1);
    return t.substr(t.find_last_of('\n') + 1);
}

std::size_t line_count(const std::string &s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST(Cli, Count)
{
    auto r = run({"count", "--set", "mary:2", "--bound", "12"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "12,20");
    EXPECT_EQ(last_line(run({"count", "--set", "all", "--bound", "4"}).out), "4,5");
    EXPECT_EQ(run({"count", "--set", "explicit:1,2,5", "--bound", "0"}).out, "0,1\n");
}

TEST(Cli, BoThresholds)
{
    auto r = run({"bo", "thresholds", "--family", "mary", "--m", "2:4", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "m,n_m,witness_w,witness_z,equality\n2,13,3,9,=\n3,17,8,8,=\n4,23,7,15,=\n");
}

TEST(Cli, BoCertify)
{
    auto r = run({"bo", "certify", "--set", "power:3", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["scheme"]["window"], json::array({54, 69}));
    EXPECT_EQ(j["version"], version);
    EXPECT_EQ(j["config"], "bo certify --set power:3 --format json");

    auto bad = run({"bo", "certify", "--set", "all"});
    EXPECT_EQ(bad.code, 0);
    EXPECT_NE(bad.out.find("valid false"), std::string::npos);
    EXPECT_NE(bad.out.find("2 a_2 <= a_3"), std::string::npos);
}

TEST(Cli, BoScan)
{
    auto r = run({"bo", "scan", "--set", "mary:3", "--min-part", "3", "--sum-max", "45", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(line_count(r.out), 1u + 7u);
    EXPECT_NE(r.out.find("8,8,9,9,=\n"), std::string::npos);

    auto filtered =
        run({"bo", "scan", "--set", "mary:2", "--min-part", "2", "--sum-max", "28", "--lemma-filter", "--format", "csv"});
    EXPECT_EQ(filtered.code, 0);
    EXPECT_EQ(line_count(filtered.out), 1u + 6u);
    EXPECT_EQ(run({"bo", "scan", "--set", "fib", "--min-part", "2", "--sum-max", "28", "--lemma-filter"}).code, 2);
}

TEST(Cli, BoPair)
{
    auto r = run({"bo", "pair", "--set", "mary:2", "--w", "3", "--z", "9", "--format", "csv"});
    EXPECT_EQ(r.out, "3,9,20,20,equal\n");
}

TEST(Cli, Max)
{
    auto r = run({"max", "--set", "fib", "--n", "8", "--check-formula", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["value"], "18");
    EXPECT_EQ(j["formula"]["status"], "pass");
    auto z = run({"max", "--set", "factorial", "--n", "0"});
    EXPECT_NE(z.out.find("max p_A(0) = 1\n"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree)
{
    auto text = run({"max", "--set", "power:2", "--n", "40"});
    auto j = json::parse(run({"max", "--set", "power:2", "--n", "40", "--format", "json"}).out);
    EXPECT_NE(text.out.find("= " + j["value"].get<std::string>() + "\n"), std::string::npos);
    EXPECT_EQ(line_count(text.out), 1 + j["witnesses"].size());
}

TEST(Cli, Inject)
{
    auto r = run({"inject", "verify", "--set", "explicit:1,2,5", "--w", "6", "--z", "4", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["domain_size"], 3);

    auto a = run({"inject", "apply", "--set", "explicit:1,2,5", "--w", "6", "--z", "4", "--parts", "5,5"});
    EXPECT_EQ(a.out, "case 4: (5^2) -> ((1^6); (2^2))\n");

    auto h = run({"inject", "verify", "--set", "explicit:1,2,5", "--w", "5", "--z", "4"});
    EXPECT_EQ(h.code, 2);
    EXPECT_NE(h.err.find("w >= a_3 + 1"), std::string::npos);
}

TEST(Cli, Enumerate)
{
    auto r = run({"enumerate", "--set", "power:2", "--n", "9"});
    EXPECT_EQ(r.out, "(9)\n(4^2,1)\n(4,1^5)\n(1^9)\n# 4 partitions\n");
    EXPECT_EQ(run({"enumerate", "--set", "all", "--n", "40", "--cap", "10"}).code, 3);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"count", "--set", "bogus", "--bound", "3"}).code, 2);
    EXPECT_EQ(run({"count", "--set", "mary:2"}).code, 2);
    EXPECT_EQ(run({"count", "--set", "mary:2", "--bound", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bo", "thresholds", "--family", "mary", "--m", "2", "--bound", "20"}).code, 3);
    EXPECT_EQ(run({"inject", "verify", "--set", "explicit:2,3,10", "--w", "12", "--z", "8"}).code, 2);
}

TEST(Cli, ConfigRoundTrip)
{
    std::vector<std::vector<std::string>> cases{
        {"count", "--set", "mary:2", "--bound", "12"},
        {"max", "--format", "json", "--n", "8", "--set", "fib", "--check-formula", "--witness-cap", "5"},
        {"bo", "scan", "--set", "mary:3", "--sum-max", "45", "--min-part", "3", "--threads", "2", "--lemma-filter"},
        {"bo", "certify", "--set", "power:2!exclude=4", "--L", "12", "--mode", "proposition"},
        {"bo", "thresholds", "--family", "mary", "--m", "2:4"},
        {"inject", "apply", "--set", "explicit:1,2,5", "--w", "6", "--z", "4", "--parts", "5,5", "--variant", "f"},
        {"conjecture", "scan", "--seed", "7", "--sets", "3"}};
    for (const auto &args : cases) {
        auto c = cli::parse_command(args);
        auto again = cli::parse_command(c.canonical_args());
        EXPECT_EQ(c, again) << c.canonical();
        EXPECT_EQ(again.canonical(), c.canonical());
    }
}

TEST(Cli, InvalidSetRejectedBeforeComputation)
{
    EXPECT_THROW(cli::parse_command({"count", "--set", "mary:1", "--bound", "5"}), parse_error);
}

TEST(Cli, ConjectureSeeded)
{
    auto a = run({"conjecture", "scan", "--sets", "3", "--bound", "40", "--format", "csv"});
    auto b = run({"conjecture", "scan", "--sets", "3", "--bound", "40", "--format", "csv", "--threads", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(line_count(a.out), 4u);
}
