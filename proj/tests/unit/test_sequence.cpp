#include <gtest/gtest.h>

#include <cmath>

#include "monadica/error.hpp"
#include "monadica/sequence.hpp"

using namespace monadica;
using namespace monadica::seq;

TEST(Catalog, Ids) {
  EXPECT_EQ(Catalog::impulse(3).str(), "e:3");
  EXPECT_EQ(Catalog::harmonic().str(), "h");
  EXPECT_EQ(Catalog::geometric(0.5).str(), "g:0.5");
  const auto& c = Catalog::standard();
  EXPECT_TRUE(c.contains("e:1"));
  EXPECT_TRUE(c.contains("h"));
  EXPECT_TRUE(c.contains("g:0.25"));
  EXPECT_FALSE(c.contains("e:0"));
  EXPECT_FALSE(c.contains("e:01"));
  EXPECT_FALSE(c.contains("g:1"));
  EXPECT_FALSE(c.contains("g:0.50"));
  EXPECT_FALSE(c.contains("q"));
  EXPECT_THROW(c.resolve("zz"), Error);
  EXPECT_THROW(Catalog::impulse(0), Error);
  EXPECT_THROW(Catalog::geometric(1.5), Error);
}

TEST(Catalog, GeneratorsAreNullSequences) {
  const auto& c = Catalog::standard();
  for (const char* id : {"e:1", "e:5", "h", "g:0.5", "g:0.9"}) {
    const auto g = c.resolve(id);
    EXPECT_LE(std::abs(g.term(1u << 20)), 1e-5) << id;
  }
}

TEST(Sequence, Terms) {
  const auto x = GeneralizedReal::make(2.0, {{"e:1", 1.0}});
  EXPECT_EQ(term(x, 1), 3.0);
  EXPECT_EQ(term(x, 2), 2.0);
  const auto h = GeneralizedReal::generator("h");
  for (std::uint64_t n : {1u, 2u, 7u, 1000u}) EXPECT_EQ(term(h, n), 1.0 / static_cast<double>(n));
  EXPECT_EQ(term(GeneralizedReal::generator("g:0.5", 0.5), 3), 0.0625);
  EXPECT_THROW(term(x, 0), Error);
  EXPECT_EQ(prefix(x, 3), (std::vector<double>{3.0, 2.0, 2.0}));
}

TEST(Sequence, UnknownGeneratorInTerm) {
  const auto x = GeneralizedReal::make(0.0, {{"nope", 1.0}});
  try {
    term(x, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
  }
}

TEST(Sequence, ConvergenceWitness) {
  EXPECT_EQ(convergence_witness(GeneralizedReal::make(2.0, {{"e:1", 1.0}}), 1e-9, 1 << 20), 2u);
  EXPECT_EQ(convergence_witness(GeneralizedReal::generator("h"), 0.01, 1 << 20), 101u);
  EXPECT_EQ(convergence_witness(GeneralizedReal(5.0), 1e-3, 1 << 20), 1u);
  EXPECT_EQ(convergence_witness(GeneralizedReal::generator("h"), 1e-9, 1000), std::nullopt);
  EXPECT_THROW(convergence_witness(GeneralizedReal(5.0), 0.0, 100), Error);
}

TEST(Sequence, SampleIndicesAreIncreasing) {
  const auto idx = sample_indices(1000);
  ASSERT_FALSE(idx.empty());
  EXPECT_EQ(idx.front(), 1u);
  for (std::size_t i = 1; i < idx.size(); ++i) EXPECT_LT(idx[i - 1], idx[i]);
  EXPECT_LE(idx.back(), 1000u);
}

TEST(Sequence, Oracles) {
  const auto x = GeneralizedReal::make(2.0, {{"e:1", 1.0}});
  const auto y = GeneralizedReal::make(3.0, {{"e:2", 1.0}});
  EXPECT_EQ(oracle_binary(BinaryOp::Mul, x, y, 4), (std::vector<double>{9.0, 8.0, 6.0, 6.0}));
  EXPECT_EQ(oracle_binary(BinaryOp::Add, x, GeneralizedReal(0.0), 5), prefix(x, 5));
  const auto inv = oracle_inverse(x, 4);
  // 1/2 - (x_n - 2)/4
  EXPECT_EQ(inv, (std::vector<double>{0.25, 0.5, 0.5, 0.5}));
  EXPECT_THROW(oracle_inverse(GeneralizedReal::generator("h"), 4), Error);
  // 2^3 + 3 * 2^2 * (x_n - 2)
  EXPECT_EQ(oracle_pow(x, 3, 2), (std::vector<double>{20.0, 8.0}));
}

TEST(Sequence, PrefixRank) {
  const std::vector<GeneratorId> ids{"e:1", "e:2", "h"};
  EXPECT_EQ(prefix_rank(ids, 64), 3u);
  const std::vector<GeneratorId> dup{"e:1", "e:1"};
  EXPECT_EQ(prefix_rank(dup, 64), 1u);
}
