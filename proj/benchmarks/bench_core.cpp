#include <benchmark/benchmark.h>

#include <random>

#include "monadica/calculus.hpp"
#include "monadica/generalized_real.hpp"
#include "monadica/generalized_set.hpp"
#include "monadica/sequence.hpp"

namespace {

using monadica::GeneralizedReal;

GeneralizedReal sample(std::mt19937_64& eng, int terms) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  GeneralizedReal::Coefficients c;
  for (int k = 1; k <= terms; ++k) c.emplace_back(monadica::seq::Catalog::impulse(k), u(eng));
  return GeneralizedReal::make(u(eng) + 4.0, std::move(c));
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 eng(1);
  const auto x = sample(eng, static_cast<int>(state.range(0)));
  const auto y = sample(eng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Mul)->Arg(1)->Arg(4)->Arg(16)->Arg(64);

void BM_Inv(benchmark::State& state) {
  std::mt19937_64 eng(2);
  const auto x = sample(eng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inv(x));
}
BENCHMARK(BM_Inv)->Arg(1)->Arg(16);

void BM_OracleMul64(benchmark::State& state) {
  std::mt19937_64 eng(3);
  const auto x = sample(eng, 3);
  const auto y = sample(eng, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monadica::seq::oracle_binary(monadica::seq::BinaryOp::Mul, x, y, 64));
  }
}
BENCHMARK(BM_OracleMul64);

void BM_GenEval(benchmark::State& state) {
  const auto e = monadica::calc::parse("exp(sin(x)) * log(1 + x^2) / (2 + cos(x))");
  const auto x = GeneralizedReal(0.7) + GeneralizedReal::generator("e:1", 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(e.gen_eval(x));
}
BENCHMARK(BM_GenEval);

void BM_Taylor(benchmark::State& state) {
  const monadica::calc::GenFn f(monadica::calc::exp(monadica::calc::Expr::variable()), {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(monadica::calc::taylor(f, 0.0, static_cast<std::uint32_t>(state.range(0)),
                                                    GeneralizedReal(0.5)));
  }
}
BENCHMARK(BM_Taylor)->Arg(3)->Arg(8);

void BM_MvtGamma(benchmark::State& state) {
  const monadica::calc::GenFn f(monadica::calc::parse("x^3 + sin(x)"), {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(monadica::calc::mvt_gamma(f, GeneralizedReal(0.0), GeneralizedReal(3.0)));
  }
}
BENCHMARK(BM_MvtGamma);

void BM_SetUnion(benchmark::State& state) {
  using monadica::sets::Interval;
  std::vector<Interval> a;
  std::vector<Interval> b;
  for (int i = 0; i < state.range(0); ++i) {
    a.push_back(Interval::closed(4.0 * i, 4.0 * i + 1.0));
    b.push_back(Interval::open(4.0 * i + 0.5, 4.0 * i + 2.5));
  }
  const auto ma = monadica::sets::monad(monadica::sets::RealSet(a));
  const auto mb = monadica::sets::monad(monadica::sets::RealSet(b));
  for (auto _ : state) benchmark::DoNotOptimize(monadica::sets::set_union(ma, mb));
}
BENCHMARK(BM_SetUnion)->Arg(8)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
