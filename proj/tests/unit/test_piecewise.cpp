#include <gtest/gtest.h>

#include "monadica/error.hpp"
#include "monadica/piecewise.hpp"

using namespace monadica;
using namespace monadica::calc;

namespace {

const Expr t = Expr::variable();
const GeneralizedReal e1 = GeneralizedReal::generator("e:1");

Expr c(double v) { return Expr::constant(v); }

// y' = -1 (t < 0), 1 on m(0), 1 (t > 0)
PiecewiseGenFn kink_rhs() { return {{0.0}, {c(-1), c(1)}, {{1.0, 0.0}}}; }
// y' = 0 (t < 0), 1 on m(0), 0 (t > 0)
PiecewiseGenFn step_rhs() { return {{0.0}, {c(0), c(0)}, {{1.0, 0.0}}}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DomainError;
}

}  // namespace

TEST(Piecewise, Validate) {
  EXPECT_EQ(code_of([] { PiecewiseGenFn{{0.0}, {t}, {}}.validate(); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { PiecewiseGenFn{{1.0, 0.0}, {t, t, t}, {{}, {}}}.validate(); }),
            ErrorCode::DomainError);
}

TEST(Piecewise, Eval) {
  const PiecewiseGenFn abs{{0.0}, {-t, t}, {{0.0, 0.0}}};
  EXPECT_EQ(pw_eval(abs, GeneralizedReal(-2.0)), GeneralizedReal(2.0));
  EXPECT_EQ(pw_eval(abs, e1), GeneralizedReal(0.0));
  const PiecewiseGenFn step{{0.0}, {c(0), c(1)}, {{1.0, 1.0}}};
  EXPECT_EQ(pw_eval(step, e1), 1.0 + e1);
}

TEST(Piecewise, AbsoluteValueHasZeroDerivativeWithoutClassicalLimit) {
  const PiecewiseGenFn abs{{0.0}, {-t, t}, {{0.0, 0.0}}};
  const auto d = pw_derivative_at(abs, 0.0);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_EQ(d.probe, LimitProbe::Absent);
  EXPECT_FALSE(d.classical_limit);
  const auto inside = pw_derivative_at(abs, -3.0);
  EXPECT_EQ(inside.value, -1.0);
  EXPECT_EQ(inside.probe, LimitProbe::NotProbed);
}

TEST(Piecewise, Proviso) {
  const PiecewiseGenFn ok{{3.0}, {pow_int(t, 2), pow_int(t, 2)}, {{9.0, 6.0}}};
  const auto d = pw_derivative_at(ok, 3.0);
  EXPECT_EQ(d.value, 6.0);
  EXPECT_EQ(d.probe, LimitProbe::Exists);
  ASSERT_TRUE(d.classical_limit);
  EXPECT_NEAR(*d.classical_limit, 6.0, 1e-6);
  const PiecewiseGenFn bad{{0.0}, {pow_int(t, 2), pow_int(t, 2)}, {{0.0, 1.0}}};
  EXPECT_EQ(code_of([&] { pw_derivative_at(bad, 0.0); }), ErrorCode::ProvisoViolated);
}

TEST(Ode, FirstExampleVerifies) {
  const PiecewiseGenFn sol{{0.0}, {-t, t}, {{0.0, 1.0}}};
  const auto r = ode_verify(sol, kink_rhs());
  ASSERT_EQ(r.regions.size(), 3u);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.regions[0].region, "t < 0");
  EXPECT_EQ(r.regions[1].region, "t in m(0)");
  EXPECT_EQ(r.regions[2].region, "t > 0");
}

TEST(Ode, SecondExampleVerifies) {
  const PiecewiseGenFn sol{{0.0}, {c(0), c(1)}, {{1.0, 1.0}}};
  EXPECT_TRUE(ode_verify(sol, step_rhs()).all_pass());
}

TEST(Ode, WrongSolutionFailsLeftOfZero) {
  const PiecewiseGenFn sol{{0.0}, {t, t}, {{0.0, 1.0}}};
  const auto r = ode_verify(sol, kink_rhs());
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.regions[0].pass);
  EXPECT_TRUE(r.regions[2].pass);
  EXPECT_FALSE(r.regions[0].detail.empty());
}

TEST(Ode, RegionMismatch) {
  const PiecewiseGenFn sol{{1.0}, {-t, t}, {{0.0, 1.0}}};
  EXPECT_EQ(code_of([&] { ode_verify(sol, kink_rhs()); }), ErrorCode::RegionMismatch);
}
