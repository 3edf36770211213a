#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

using namespace motivic;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, StringyText)
{
    auto r = run({"stringy", "--p", "3", "--d", "3", "--variant", "sht", "--domain", "H"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2*L + 1\n");
    r = run({"stringy", "--p", "5", "--d", "3", "--variant", "sht"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "infinity\n");
    r = run({"stringy", "--p", "2", "--d", "2,2", "--variant", "sht-prime", "--domain", "G"});
    EXPECT_EQ(r.out, "L^4 + L^3\n");
}

TEST(Cli, StringyJsonRoundTrips)
{
    const auto r = run({"--json", "stringy", "--p", "3", "--d", "3", "--variant", "sht-prime"});
    ASSERT_EQ(r.code, 0);
    const auto v = parse_motivic_value(r.out);
    EXPECT_TRUE(mv_eq(v, MotivicValue::lefschetz(3) + MotivicValue::integer(2) * MotivicValue::lefschetz(2)));
    const auto after = run({"stringy", "--json", "--p", "3", "--d", "3", "--variant", "sht-prime"});
    EXPECT_EQ(after.out, r.out);
}

TEST(Cli, StringyTruncated)
{
    const auto r = run({"stringy", "--p", "3", "--d", "3", "--variant", "sht", "--truncate", "30"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("2*L + 1 + O(L^", 0), 0u) << r.out;
}

TEST(Cli, Moduli)
{
    EXPECT_EQ(run({"moduli", "stratum", "--p", "3", "--j", "4"}).out, render((MotivicValue::lefschetz() -
                                                                              MotivicValue::one()) *
                                                                             MotivicValue::lefschetz(2)) +
                                                                          "\n");
    EXPECT_EQ(run({"moduli", "stratum", "--p", "3", "--j", "zero"}).out, "1\n");
    EXPECT_EQ(run({"moduli", "stratum", "--p", "3", "--j", "3"}).code, 2);
    const auto m = run({"moduli", "measure-g", "--p", "2", "--level", "1", "--class", R"({"num":[[1,1]],"den":[],"infinite":false})"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out, "1\n");
    const auto t = run({"moduli", "torsor", "--p", "3", "--group", "H", "--ord", "-4"});
    EXPECT_EQ(t.out, "k((t))[z]/(z^3 - z - f), f with ord(f) = -4, generator acts by z ↦ z + 1\n");
    EXPECT_EQ(run({"moduli", "torsor", "--p", "3", "--group", "G", "--ord", "-6"}).code, 2);
}

TEST(Cli, Rep)
{
    EXPECT_EQ(run({"rep", "coaction", "--p", "3", "--d", "3"}).out, "[[1, e, 2*e^2], [0, 1, e], [0, 0, 1]]\n");
    EXPECT_EQ(run({"rep", "check-axioms", "--p", "3", "--d", "3"}).code, 0);
    EXPECT_EQ(run({"rep", "invariants", "--p", "3", "--d", "3", "--maxdeg", "2"}).out, "x1\nx1^2\nx1*x3 + x2^2\n");
    const auto j = nlohmann::json::parse(run({"--json", "rep", "invariants", "--p", "3", "--d", "3", "--maxdeg", "1"}).out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 1u);
    EXPECT_EQ(run({"rep", "derive", "--p", "3", "--d", "3", "--poly", "x2"}).out, "x1\n");
    EXPECT_EQ(run({"rep", "jordan", "--p", "2", "--d", "3"}).code, 2);
}

TEST(Cli, Quotient)
{
    EXPECT_EQ(run({"quotient", "list"}).out, "ex_d3\nex_d22_p2\nex_d2_H\n");
    const auto v = run({"quotient", "verify", "--example", "ex_d3", "--p", "5"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("relation residual: 0"), std::string::npos);
    EXPECT_EQ(run({"quotient", "count", "--example", "ex_d3", "--q", "9"}).out, "729\n");
    const auto bad = run({"quotient", "count", "--example", "ex_d3", "--q", "2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("WrongCharacteristic"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"quotient", "count", "--example", "ex_d3", "--q", "6"}).code, 2);
    const auto ok = run({"quotient", "check", "--example", "ex_d22_p2", "--q", "2", "--value",
                         R"({"num":[[4,1]],"den":[],"infinite":false})"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("equal: true"), std::string::npos);
    const auto wrong = run({"quotient", "check", "--example", "ex_d22_p2", "--q", "2", "--value",
                            R"({"num":[[3,1]],"den":[],"infinite":false})"});
    EXPECT_EQ(wrong.code, 1);
}

TEST(Cli, BudgetFromEnvironment)
{
    ::setenv("MOTIVIC_BUDGET", "10", 1);
    const auto r = run({"quotient", "count", "--example", "ex_d3", "--q", "3"});
    ::unsetenv("MOTIVIC_BUDGET");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos) << r.err;
    EXPECT_EQ(run({"quotient", "count", "--example", "ex_d3", "--q", "3"}).out, "27\n");
}

TEST(Cli, Covars)
{
    EXPECT_EQ(run({"covars", "total", "--p", "5"}).out, "L^2\n");
    EXPECT_EQ(run({"covars", "part", "--p", "3", "--which", "neg"}).out, "(L - L^-1)/(1 - L^-3)\n");
    EXPECT_EQ(run({"covars", "sf-check", "--p", "7", "--jmax", "1000"}).out, "pass\n");
    EXPECT_EQ(run({"covars", "measure", "--p", "3", "--stratum", "nonneg:i=3"}).out,
              render((MotivicValue::lefschetz() - MotivicValue::one()) * MotivicValue::lefschetz(-2)) + "\n");
    EXPECT_EQ(run({"covars", "measure", "--p", "3", "--stratum", "neg:d=0,e=3,i=0"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"stringy", "--p", "3"}).code, 2);
    EXPECT_EQ(run({"stringy", "--p", "4", "--d", "2"}).code, 2);
    EXPECT_EQ(run({"nosuch"}).code, 2);
    EXPECT_EQ(run({"covars", "part", "--p", "3", "--which", "all"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SelftestQuick)
{
    const auto r = run({"selftest", "--quick"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS [1]"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    const auto again = run({"selftest", "--quick"});
    EXPECT_EQ(again.out, r.out);
    const auto faulted = run({"selftest", "--quick", "--inject-sht-fault", "1"});
    EXPECT_EQ(faulted.code, 1);
    EXPECT_NE(faulted.out.find("FAIL [1]"), std::string::npos);
}
