#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <qsteinberg/cli.hpp>
#include <qsteinberg/serialize.hpp>

using namespace qsteinberg;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, ValueGolden)
{
    auto r = run({"value", "--group", "an", "--n", "5", "--lambda", "3,1,1", "--variant", "+", "--class", "5+"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "(1 + √5)/2\n");
    r = run({"value", "--group", "an", "--lambda", "3,1,1:-", "--class", "5−"});
    EXPECT_EQ(r.out, "(1 + √5)/2\n");
    r = run({"value", "--lambda", "3,3", "--class", "4,2"});
    EXPECT_EQ(r.out, "-1\n");
    r = run({"value", "--group", "sn-tilde-spin", "--lambda", "4:+", "--class", "4"});
    EXPECT_EQ(r.out, "-√2\n");
    r = run({"value", "--group", "an-tilde-spin", "--lambda", "3,1", "--variant", "+", "--class", "3,1+"});
    EXPECT_EQ(r.out, "(-1 + i√3)/2\n");
}

TEST(Cli, TableCsv)
{
    auto r = run({"table", "--group", "sn", "--n", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "label,3,\"2,1\",\"1,1,1\"\n3,1,1,1\n\"2,1\",-1,0,2\n\"1,1,1\",1,-1,1\n");
}

TEST(Cli, TableJsonRoundTrip)
{
    for (Group g : kAllGroups)
        for (unsigned n = 2; n <= 8; ++n) {
            auto r = run({"table", "--group", std::string(group_name(g)), "--n", std::to_string(n), "--format", "json"});
            ASSERT_EQ(r.code, 0) << r.err;
            const LabeledTable t = table_from_json(json::parse(r.out));
            EXPECT_EQ(table_to_json(t).dump(2) + "\n", r.out);
            EXPECT_EQ(t.values, build_table(g, n).values);
        }
}

TEST(Cli, ReportJsonRoundTrip)
{
    auto r = run({"classify", "--group", "an", "--n-range", "3..9", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    json again = json::array();
    for (const auto& item : j)
        again.push_back(report_to_json(report_from_json(item)));
    EXPECT_EQ(again.dump(2) + "\n", r.out);
}

TEST(Cli, ValueJsonRoundTrip)
{
    for (const auto& v : {AlgValue(7), AlgValue::make(Rational(1, 2), Rational(-3, 2), 1, 15), AlgValue(Rational(5, 3)),
                          AlgValue(BigInt("123456789012345678901234567890"))})
        EXPECT_EQ(value_from_json(json::parse(value_to_json(v).dump())), v);
}

TEST(Cli, ClassifyFormats)
{
    auto r = run({"classify", "--group", "sn", "--n", "8", "--p", "2", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 1u + 22u);
    EXPECT_NE(r.out.find("sn,8,2,hit,\"5,2,1\",64,false,\n"), std::string::npos);
    r = run({"classify", "--group", "sn-tilde-spin", "--n-range", "4..6", "--primes", "2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sn-tilde-spin n=6 p=3: 0 quasi"), std::string::npos);
}

TEST(Cli, OutputDeterministicAcrossThreads)
{
    std::string first;
    for (const char* threads : {"1", "4", "8"}) {
        auto r = run({"verify-paper", "--max-n", "10", "--format", "json", "--threads", threads});
        EXPECT_EQ(r.code, 0);
        if (first.empty())
            first = r.out;
        EXPECT_EQ(r.out, first);
    }
    EXPECT_NE(first.find("\"pass\": true"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwoWithOneLine)
{
    const std::vector<std::vector<std::string>> bad{
        {"table", "--n", "3", "--bogus"},
        {"value", "--group", "sn-tilde-spin", "--lambda", "5,2,2", "--class", "9"},
        {"classify", "--group", "sn", "--n", "6", "--p", "4"},
        {"classify", "--group", "sn", "--n", "40", "--p", "2"},
        {"classify", "--group", "sn", "--n-range", "5..x"},
        {"table", "--group", "nope", "--n", "3"},
        {"table", "--n", "3", "--format", "xml"},
        {"value", "--lambda", "3,1", "--class", "2,1"},
        {"value", "--group", "an", "--lambda", "3,1,1", "--class", "5+"},
        {"verify-paper", "--max-n", "2"},
        {},
    };
    for (const auto& args : bad) {
        auto r = run(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
        EXPECT_TRUE(r.out.empty());
        EXPECT_EQ(count_lines(r.err), 1u) << r.err;
        EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
    }
    auto big = run({"classify", "--group", "sn", "--n", "40", "--p", "2"});
    EXPECT_NE(big.err.find("resource bound exceeded"), std::string::npos);
}

TEST(Cli, HelpAndOutputFile)
{
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify-paper"), std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "qsteinberg_cli_test.txt";
    r = run({"table", "--n", "4", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    EXPECT_EQ(contents.str(), run({"table", "--n", "4"}).out);
    std::filesystem::remove(path);
}
