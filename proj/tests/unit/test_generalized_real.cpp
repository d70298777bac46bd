#include <gtest/gtest.h>

#include <cmath>

#include "monadica/error.hpp"
#include "monadica/generalized_real.hpp"
#include "monadica/sequence.hpp"

using namespace monadica;
using namespace monadica::seq;

namespace {

GeneralizedReal e(std::uint64_t k, double c = 1.0) {
  return GeneralizedReal::generator(Catalog::impulse(k), c);
}

// Limit of the termwise sequence minus its shadow, read back at the impulse
// positions: for x = s + sum c_k e:k the n-th term is s + c_n.
double impulse_coeff_from_terms(const std::vector<double>& prefix, double shadow, std::size_t k) {
  return prefix[k - 1] - shadow;
}

void expect_code(ErrorCode code, auto&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), code) << err.what();
  }
}

}  // namespace

TEST(GeneralizedReal, MakePrunesZeroCoefficients) {
  const auto z = GeneralizedReal::make(0.0, {});
  EXPECT_EQ(z.shadow(), 0.0);
  EXPECT_TRUE(z.is_real());
  const auto x = GeneralizedReal::make(2.0, {{"e:1", 1.0}});
  EXPECT_EQ(sigma(x), 2.0);
  EXPECT_EQ(dpart(x), e(1));
  const auto t = GeneralizedReal::make(3.0, {{"e:1", 0.0}});
  EXPECT_TRUE(t.is_real());
  EXPECT_EQ(t, GeneralizedReal(3.0));
}

TEST(GeneralizedReal, RejectsNonFinite) {
  expect_code(ErrorCode::NonFiniteInput, [] { GeneralizedReal::make(NAN, {}); });
  expect_code(ErrorCode::NonFiniteInput, [] { GeneralizedReal::make(1.0, {{"h", INFINITY}}); });
}

TEST(GeneralizedReal, AdditionMatchesTermwiseOracle) {
  const auto x = 2.0 + e(1);
  const auto y = 3.0 + e(2);
  const auto sum = x + y;
  EXPECT_EQ(sum, GeneralizedReal::make(5.0, {{"e:1", 1.0}, {"e:2", 1.0}}));
  const auto oracle = oracle_binary(BinaryOp::Add, x, y, 64);
  EXPECT_NEAR(impulse_coeff_from_terms(oracle, 5.0, 1), sum.coefficient("e:1"), 1e-12);
  EXPECT_NEAR(impulse_coeff_from_terms(oracle, 5.0, 2), sum.coefficient("e:2"), 1e-12);
  EXPECT_NEAR(oracle.back(), 5.0, 1e-12);
  EXPECT_EQ(x + GeneralizedReal(0.0), x);
  EXPECT_EQ((1.0 + e(1)) + (-1.0 - e(1)), GeneralizedReal(0.0));
}

TEST(GeneralizedReal, MultiplicationMatchesTermwiseOracle) {
  const auto x = 2.0 + e(1);
  const auto y = 3.0 + e(2);
  const auto p = x * y;
  EXPECT_EQ(p, GeneralizedReal::make(6.0, {{"e:1", 3.0}, {"e:2", 2.0}}));
  // (2 + [n=1]) * (3 + [n=2]) literally at n = 1..4.
  const std::vector<double> expected{9.0, 8.0, 6.0, 6.0};
  EXPECT_EQ(oracle_binary(BinaryOp::Mul, x, y, 4), expected);
  EXPECT_EQ(prefix(p, 4), expected);
  EXPECT_EQ(x * GeneralizedReal(1.0), x);
}

TEST(GeneralizedReal, InfinitesimalsAreNilpotent) {
  EXPECT_EQ(e(1) * e(1), GeneralizedReal(0.0));
  EXPECT_EQ(e(1) * e(2), GeneralizedReal(0.0));
  EXPECT_EQ(pow_nat(e(1), 2), GeneralizedReal(0.0));
  const auto h = GeneralizedReal::generator(Catalog::harmonic());
  EXPECT_TRUE((h * h).coefficients().empty());
  for (double v : oracle_binary(BinaryOp::Mul, e(1), e(1), 16)) EXPECT_EQ(v, 0.0);
}

TEST(GeneralizedReal, Inverse) {
  EXPECT_EQ(inv(2.0 + e(1)), GeneralizedReal::make(0.5, {{"e:1", -0.25}}));
  EXPECT_EQ((2.0 + e(1)) * inv(2.0 + e(1)), GeneralizedReal(1.0));
  EXPECT_EQ(inv(GeneralizedReal(1.0)), GeneralizedReal(1.0));
  expect_code(ErrorCode::NotInvertible, [] { inv(e(1)); });
  expect_code(ErrorCode::NotInvertible, [] { div(GeneralizedReal(1.0), e(2)); });
  EXPECT_EQ(div(GeneralizedReal(6.0), GeneralizedReal(2.0)), GeneralizedReal(3.0));
}

TEST(GeneralizedReal, PowersAndRoots) {
  EXPECT_EQ(pow_nat(2.0 + e(1), 2), GeneralizedReal::make(4.0, {{"e:1", 4.0}}));
  EXPECT_EQ(pow_nat(2.0 + e(1), 1), 2.0 + e(1));
  const auto oracle = oracle_pow(2.0 + e(1), 2, 8);
  EXPECT_EQ(oracle, prefix(pow_nat(2.0 + e(1), 2), 8));
  EXPECT_EQ(root(4.0 + e(1), 2), GeneralizedReal::make(2.0, {{"e:1", 0.25}}));
  const auto r3 = root(1.0 + e(1), 3);
  EXPECT_DOUBLE_EQ(r3.shadow(), 1.0);
  EXPECT_NEAR(r3.coefficient("e:1"), 1.0 / 3.0, 1e-15);
  expect_code(ErrorCode::DomainError, [] { root(-1.0 + e(1), 2); });
}

TEST(GeneralizedReal, ShadowAndDifferential) {
  EXPECT_EQ(sigma(2.0 + e(1)), 2.0);
  EXPECT_EQ(dpart(2.0 + e(1)), e(1));
  EXPECT_EQ(dpart(GeneralizedReal(3.5)), GeneralizedReal(0.0));
  EXPECT_EQ((2.0 + e(1)).differential(), e(1));
}

TEST(GeneralizedReal, Comparison) {
  EXPECT_EQ(cmp3(1.0 + e(1), 2.0 + e(2)), Cmp3::Less);
  EXPECT_EQ(cmp3(e(1), e(2)), Cmp3::Indiscernible);
  EXPECT_EQ(cmp3(GeneralizedReal(3.0), 2.0 + e(1)), Cmp3::Greater);
  EXPECT_TRUE(lt(1.0 + e(1), GeneralizedReal(2.0)));
  EXPECT_FALSE(lt(e(1), e(2)));
  EXPECT_TRUE(indiscernible(e(1), e(2)));
  EXPECT_TRUE(lesssim(e(1), e(2)));
  EXPECT_TRUE(lesssim(GeneralizedReal(1.0), 2.0 + e(1)));
  EXPECT_FALSE(lesssim(GeneralizedReal(3.0), 2.0 + e(1)));
}

TEST(GeneralizedReal, ArchimedeanWitness) {
  const auto x = 0.5 + e(1);
  const auto n = archimedean_witness(x, GeneralizedReal(10.0));
  EXPECT_EQ(n, 21u);
  EXPECT_GT(static_cast<double>(n) * 0.5, 10.0);
  EXPECT_FALSE(static_cast<double>(n - 1) * 0.5 > 10.0);
  EXPECT_EQ(archimedean_witness(GeneralizedReal(1.0), GeneralizedReal(0.0)), 1u);
  expect_code(ErrorCode::DomainError, [] { archimedean_witness(e(1), GeneralizedReal(1.0)); });
}

TEST(GeneralizedReal, Density) {
  EXPECT_EQ(density_real_between(1.0 + e(1), GeneralizedReal(2.0)), 1.5);
  const auto z = density_nonreal_between(0.0, 1.0);
  EXPECT_EQ(z.shadow(), 0.5);
  EXPECT_FALSE(z.is_real());
  EXPECT_TRUE(lt(GeneralizedReal(0.0), z));
  EXPECT_TRUE(lt(z, GeneralizedReal(1.0)));
  expect_code(ErrorCode::DomainError, [] { density_real_between(e(1), e(2)); });
}

TEST(GeneralizedReal, QuotientRepresentative) {
  EXPECT_EQ(quotient_repr(2.0 + e(1)), 2.0);
  EXPECT_EQ(quotient_repr(e(1)), 0.0);
  const auto x = 2.0 + e(1);
  const auto y = 3.0 + e(2);
  EXPECT_EQ(quotient_repr(x * y), quotient_repr(x) * quotient_repr(y));
  EXPECT_EQ(quotient_repr(x * y), 6.0);
}

TEST(GeneralizedReal, CancellationLeavesNoResidue) {
  const auto a = GeneralizedReal::make(0.0, {{"h", 0.1}});
  const auto b = GeneralizedReal::make(0.0, {{"h", 0.2}});
  const auto c = GeneralizedReal::make(0.0, {{"h", 0.3}});
  EXPECT_TRUE(((a + b) - c).coefficients().empty());
}

TEST(GeneralizedReal, Printing) {
  std::ostringstream os;
  os << (2.0 + e(1));
  EXPECT_FALSE(os.str().empty());
}
