#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "monadica/error.hpp"
#include "monadica/expr.hpp"

using namespace monadica;
using namespace monadica::calc;

namespace {

const GeneralizedReal e1 = GeneralizedReal::generator("e:1");
const Expr x = Expr::variable();

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DomainError;
}

double central(const Expr& f, double xi, double h = 1e-6) {
  return (f.eval(xi + h) - f.eval(xi - h)) / (2.0 * h);
}

}  // namespace

TEST(Expr, ConstantFolding) {
  EXPECT_TRUE((Expr::constant(2) + Expr::constant(3)).is_constant(5));
  EXPECT_TRUE(exp(Expr::constant(0)).is_constant(1));
  EXPECT_TRUE((x * Expr::constant(0)).is_constant(0));
  EXPECT_EQ(x * Expr::constant(1), x);
  EXPECT_EQ(x + Expr::constant(0), x);
}

TEST(Expr, Eval) {
  EXPECT_DOUBLE_EQ((pow_int(x, 2) + Expr::constant(3) * x).eval(2.0), 10.0);
  EXPECT_DOUBLE_EQ(exp(x).eval(1.0), std::numbers::e);
  EXPECT_DOUBLE_EQ(root(x, 3).eval(27.0), 3.0);
  EXPECT_EQ(code_of([] { log(x).eval(-1.0); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { (Expr::constant(1) / x).eval(0.0); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { pow_real(x, 0.5).eval(-1.0); }), ErrorCode::OutOfDomain);
}

TEST(Expr, Parse) {
  EXPECT_DOUBLE_EQ(parse("x^2 + 3*x").eval(2.0), 10.0);
  EXPECT_DOUBLE_EQ(parse("sqrt(x)").eval(9.0), 3.0);
  EXPECT_DOUBLE_EQ(parse("root(3, x)").eval(8.0), 2.0);
  EXPECT_DOUBLE_EQ(parse("pow(0.5, x)").eval(16.0), 4.0);
  EXPECT_DOUBLE_EQ(parse("-x^2").eval(3.0), -9.0);
  EXPECT_DOUBLE_EQ(parse("2^3").eval(0.0), 8.0);
  EXPECT_DOUBLE_EQ(parse("sin(x)^2 + cos(x)^2").eval(0.3), 1.0);
  EXPECT_DOUBLE_EQ(parse("exp(log(x))").eval(2.5), 2.5);
  EXPECT_DOUBLE_EQ(parse("x/(1+x)").eval(1.0), 0.5);
  for (const char* bad : {"", "x+", "foo(x)", "(x", "x)", "y", "root(0, x)", "1e999"}) {
    EXPECT_EQ(code_of([&] { parse(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(Expr, ToStringRoundTrips) {
  for (const char* text : {"x^2 + 3*x", "exp(sin(x))", "log(1 + x^2)", "x/(2 + cos(x))", "sqrt(2 + x)",
                           "pow(1.5, x)"}) {
    const Expr e = parse(text);
    const Expr back = parse(e.to_string());
    for (double xi : {0.25, 0.5, 1.75}) EXPECT_DOUBLE_EQ(e.eval(xi), back.eval(xi)) << text;
  }
}

TEST(Expr, LambdaPrimitives) {
  EXPECT_DOUBLE_EQ(lambda(pow_int(x, 2)).eval(3.0), 6.0);
  EXPECT_DOUBLE_EQ(lambda(exp(x)).eval(0.7), std::exp(0.7));
  EXPECT_TRUE(lambda(Expr::constant(4)).is_constant(0));
  EXPECT_DOUBLE_EQ(lambda(sin(x)).eval(0.4), std::cos(0.4));
  EXPECT_DOUBLE_EQ(lambda(log(x)).eval(4.0), 0.25);
}

TEST(Expr, LambdaAgreesWithDifferenceQuotient) {
  for (const char* text : {"exp(sin(x))", "log(1 + x^2)", "x/(2 + cos(x))", "sqrt(2 + sin(x))",
                           "pow(2.5, 1 + x^2)", "root(3, 2 + x)"}) {
    const Expr f = parse(text);
    for (double xi : {-0.6, 0.1, 0.9}) {
      const double want = central(f, xi);
      EXPECT_NEAR(lambda(f).eval(xi), want, 1e-5 * std::max(1.0, std::abs(want))) << text;
    }
  }
}

TEST(Expr, LambdaChainMatchesRepeatedLambda) {
  const Expr f = parse("exp(sin(x)) * log(2 + x^2)");
  const auto chain = lambda_chain(f, 4);
  ASSERT_EQ(chain.size(), 5u);
  Expr d = f;
  for (std::uint32_t k = 0; k <= 4; ++k) {
    EXPECT_NEAR(chain[k].eval(0.3), d.eval(0.3), 1e-12 * std::max(1.0, std::abs(d.eval(0.3))));
    d = lambda(d);
  }
  EXPECT_NEAR(lambda_n(f, 3).eval(0.3), chain[3].eval(0.3), 1e-12);
}

TEST(Expr, ProgramMatchesEval) {
  const Expr f = lambda_n(parse("x/(2 + cos(x)) + sqrt(1 + x^2)"), 3);
  const Program p(f);
  for (double xi : {-2.0, -0.5, 0.0, 0.75, 3.0}) EXPECT_EQ(p(xi), f.eval(xi));
  const Program lg(log(x));
  EXPECT_EQ(code_of([&] { lg(-1.0); }), ErrorCode::OutOfDomain);
}

TEST(Expr, HatIdentities) {
  EXPECT_EQ(exp_hat(e1), 1.0 + e1);
  EXPECT_EQ(log_hat(1.0 + e1), e1);
  EXPECT_EQ(sin_hat(e1), e1);
  EXPECT_EQ(cos_hat(e1), GeneralizedReal(1.0));
  for (double a : {-1.0, 0.5, 2.0, std::numbers::pi}) {
    const auto y = pow_real_hat(1.0 + e1, a);
    EXPECT_EQ(y.shadow(), 1.0);
    EXPECT_NEAR(y.coefficient("e:1"), a, 1e-12);
  }
  EXPECT_EQ(code_of([] { log_hat(e1); }), ErrorCode::OutOfDomain);
}

TEST(Expr, GenEval) {
  const auto y = parse("x^2 + 3*x").gen_eval(2.0 + e1);
  EXPECT_EQ(y.shadow(), 10.0);
  EXPECT_EQ(y.coefficient("e:1"), 7.0);
  const auto one = parse("sin(x)^2 + cos(x)^2").gen_eval(0.7 + e1);
  EXPECT_NEAR(one.shadow(), 1.0, 1e-15);
  EXPECT_TRUE(one.coefficients().empty());
  const auto r = exp(x).gen_eval(GeneralizedReal(1.0));
  EXPECT_TRUE(r.is_real());
  EXPECT_DOUBLE_EQ(r.shadow(), std::numbers::e);
}

TEST(Expr, RangeAnalysis) {
  const auto r = range_over(Expr::constant(2) + cos(x), OpenInterval{});
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->strictly_positive());
  const auto lr = range_over(log(x), OpenInterval{-1.0, 1.0});
  EXPECT_FALSE(lr);
  ASSERT_TRUE(range_over(log(x), OpenInterval{0.0, 1.0}));
  const auto s = range_over(sin(x), OpenInterval{});
  ASSERT_TRUE(s);
  EXPECT_FALSE(s->excludes_zero());
}

TEST(Expr, InverseAndMonotoneImage) {
  const Expr inv = inverse_of(exp(x), OpenInterval{});
  EXPECT_NEAR(inv.eval(std::numbers::e), 1.0, 1e-14);
  const OpenInterval img = monotone_image(exp(x), OpenInterval{});
  EXPECT_EQ(img.lo, 0.0);
  EXPECT_EQ(img.hi, INFINITY);
}
