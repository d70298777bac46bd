#include <gtest/gtest.h>

#include <bit>
#include <cstdlib>
#include <random>
#include <sstream>

#include "codec.hpp"
#include "commands.hpp"
#include "monadica/error.hpp"

using namespace monadica;
using namespace monadica::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EvalExp) {
  const auto r = run_cli({"eval", "exp(x)", "--at", R"({"shadow":0,"d":{"e:1":1}})"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"shadow\":1,\"d\":{\"e:1\":1}}\n");
}

TEST(Cli, EvalAcceptsBareNumber) {
  const auto r = run_cli({"eval", "x^2 + 3*x", "--at", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"shadow\":10,\"d\":{}}\n");
}

TEST(Cli, Diff) {
  EXPECT_EQ(run_cli({"diff", "x^2", "--at", R"({"shadow":3,"d":{}})"}).out, "6\n");
  EXPECT_EQ(run_cli({"diff", "x^2", "--at", "3", "--order", "2"}).out, "2\n");
  EXPECT_EQ(run_cli({"diff", "x^2", "--at", "3", "--order", "0"}).out, "9\n");
}

TEST(Cli, Taylor) {
  const auto r = run_cli({"taylor", "exp(x)", "--center", "0", "--order", "3", "--at", "0.5"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["partial_sum"].get<double>(), 1.6458333333, 1e-9);
  EXPECT_NEAR(j["theta"].get<double>(), 0.2068, 1e-4);
  EXPECT_GE(j["remainder_bound"].get<double>(), 0.0);
}

TEST(Cli, SeqPrint) {
  const auto r = run_cli({"seq", "print", R"({"shadow":2,"d":{"e:1":1}})", "--terms", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "[3,2,2]\n");
}

TEST(Cli, Sets) {
  const std::string unit = R"({"intervals":[{"lo":0,"hi":1}]})";
  const auto interior = run_cli({"sets", "interior", unit});
  EXPECT_EQ(interior.code, kExitOk);
  const auto j = json::parse(interior.out);
  EXPECT_EQ(j["intervals"][0]["lo_closed"], false);
  EXPECT_EQ(j["intervals"][0]["hi_closed"], false);
  EXPECT_EQ(run_cli({"sets", "member", unit, R"({"shadow":0.5,"d":{"e:1":1}})"}).out, "true\n");
  EXPECT_EQ(run_cli({"sets", "is_compact", unit}).out, "true\n");
  EXPECT_EQ(run_cli({"sets", "sup", unit}).out, "1\n");
  const auto u = run_cli({"sets", "union", unit, R"({"intervals":[{"lo":2,"hi":3}]})"});
  EXPECT_EQ(json::parse(u.out)["intervals"].size(), 2u);
}

TEST(Cli, DomainErrorsAreJson) {
  const auto r = run_cli({"eval", "log(x)", "--at", "-1"});
  EXPECT_EQ(r.code, kExitDomainError);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["error"], "OutOfDomain");
  EXPECT_TRUE(j.contains("message"));
  const auto u = run_cli({"sets", "length", R"({"intervals":[{"lo":0,"hi":"+inf"}]})"});
  EXPECT_EQ(u.code, kExitDomainError);
  EXPECT_EQ(json::parse(u.out)["error"], "LengthUndefined");
  const auto g = run_cli({"eval", "x", "--at", R"({"shadow":0,"d":{"zz":1}})"});
  EXPECT_EQ(g.code, kExitDomainError);
  EXPECT_EQ(json::parse(g.out)["error"], "UnknownGenerator");
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"eval", "x"}, {"eval", "x+", "--at", "1"},
        {"eval", "x", "--at", "{not json"}, {"verify", "--suite", "nope"}, {"diff", "x", "--at", "1", "--order", "-1"}}) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_NE(r.err.find("usage error"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, VerifyRing) {
  const auto r = run_cli({"verify", "--suite", "ring"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_FALSE(j["suites"][0]["properties"].empty());
  const auto p = run_cli({"verify", "--suite", "ring", "--pretty"});
  EXPECT_NE(p.out.find("PASS"), std::string::npos);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("MONADICA_SEED", "7", 1);
  const auto r = run_cli({"verify", "--suite", "identities"});
  ::unsetenv("MONADICA_SEED");
  EXPECT_EQ(json::parse(r.out)["seed"], 7);
  const auto flag = run_cli({"verify", "--suite", "identities", "--seed", "3"});
  EXPECT_EQ(json::parse(flag.out)["seed"], 3);
}

TEST(Cli, Ode) {
  const auto ok = run_cli({"ode", "kink"});
  EXPECT_EQ(ok.code, kExitOk);
  const auto j = json::parse(ok.out);
  EXPECT_EQ(j["regions"][0]["status"], "pass");
  EXPECT_FALSE(j["points"].empty());
  EXPECT_EQ(run_cli({"ode", "step"}).code, kExitOk);
  const auto bad = run_cli({"ode", "wrong"});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  EXPECT_EQ(json::parse(bad.out)["regions"][0]["status"], "fail");
}

TEST(Cli, Repl) {
  const auto r = run_cli({"repl"}, "eval \"x^2\" --at 3\n\ndiff 'x^2' --at 3\nbogus\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"shadow\":9,\"d\":{}}\n6\n");
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Cli, SplitLine) {
  const std::vector<std::string> want{"eval", "exp(x)", "--at", R"({"a": 1})"};
  EXPECT_EQ(split_line(R"~(eval "exp(x)" --at '{"a": 1}')~"), want);
  EXPECT_THROW(split_line("eval \"x"), Error);
}

TEST(Codec, RoundTripIsBitExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 500; ++i) {
    const double s = u(rng) * std::ldexp(1.0, static_cast<int>(rng() % 40) - 20);
    const auto x = GeneralizedReal::make(s, {{"e:1", u(rng)}, {"h", u(rng) / 3.0}, {"g:0.5", 1.0 / u(rng)}});
    const auto back = decode_value(json::parse(encode(x).dump()));
    ASSERT_EQ(back, x);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(back.shadow()), std::bit_cast<std::uint64_t>(x.shadow()));
  }
}

TEST(Codec, IntegralNumbersPrintAsIntegers) {
  EXPECT_EQ(number(3.0).dump(), "3");
  EXPECT_EQ(number(-0.5).dump(), "-0.5");
  EXPECT_EQ(number(1e300).dump(), "1e+300");
}

TEST(Codec, SetRoundTrip) {
  using namespace monadica::sets;
  const GeneralizedSet g(RealSet({Interval{-kInf, -1, false, true}, Interval::open(0, 1), Interval::point(4)}),
                         {7.5});
  EXPECT_EQ(decode_set(json::parse(encode(g).dump())), g);
}

TEST(Codec, RejectsMalformedValues) {
  EXPECT_THROW(decode_value(json::parse(R"({"d":{}})")), Error);
  EXPECT_THROW(decode_value(json::parse(R"("x")")), Error);
  EXPECT_THROW(decode_value(json::parse(R"({"shadow":1,"d":{"e:1":"a"}})")), Error);
}
