#include <gtest/gtest.h>

#include "monadica/error.hpp"
#include "monadica/verify.hpp"

using namespace monadica;

class Suites : public ::testing::TestWithParam<std::tuple<std::string, std::uint64_t>> {};

TEST_P(Suites, AllPropertiesPass) {
  const auto& [name, seed] = GetParam();
  const auto report = verify::run_suite(name, seed);
  EXPECT_EQ(report.suite, name);
  EXPECT_EQ(report.seed, seed);
  ASSERT_FALSE(report.results.empty());
  for (const auto& r : report.results) {
    EXPECT_TRUE(r.pass) << r.property << ": " << r.detail;
    EXPECT_GT(r.cases, 0u) << r.property;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Suites,
                         ::testing::Combine(::testing::ValuesIn(verify::suite_names()),
                                            ::testing::Values(0u, 1u)),
                         [](const auto& info) {
                           return std::get<0>(info.param) + "_seed" + std::to_string(std::get<1>(info.param));
                         });

TEST(Verify, Deterministic) {
  const auto a = verify::run_suite("ring", 5);
  const auto b = verify::run_suite("ring", 5);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) EXPECT_EQ(a.results[i].detail, b.results[i].detail);
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(verify::has_suite("nope"));
  EXPECT_TRUE(verify::has_suite("taylor"));
  EXPECT_THROW(verify::run_suite("nope", 0), Error);
}
