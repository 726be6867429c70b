#include <benchmark/benchmark.h>

#include "capelli/capelli_verify.hpp"
#include "capelli/exterior_suite.hpp"

using namespace capelli;

namespace {

WeylElement dense_element(int vars, int width) {
  WeylElement w(vars);
  for (int i = 0; i < vars; ++i) {
    for (int e = 1; e <= width; ++e) {
      WeylMonomial m{std::vector<int>(vars), std::vector<int>(vars)};
      m.x[i] = e;
      m.d[(i + 1) % vars] = e;
      w += WeylElement::monomial(vars, m, Scalar(Rational(e, 2)));
    }
  }
  return w;
}

void BM_WeylNormalOrder(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  WeylElement a = dense_element(vars, 3);
  WeylElement b = dense_element(vars, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_WeylNormalOrder)->Arg(2)->Arg(4)->Arg(6);

void BM_PbwStraighten(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> blocks{n};
  UEnvElement prod = UEnvElement::constant(blocks, Scalar(1));
  // a descending word forces the full straightening cascade
  for (auto _ : state) {
    UEnvElement acc = UEnvElement::constant(blocks, Scalar(1));
    for (int i = n; i >= 1; --i) {
      for (int j = 1; j <= n; ++j) {
        acc = acc * UEnvElement::generator(blocks, {0, i, j});
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PbwStraighten)->Arg(2)->Arg(3);

void BM_XiPower(benchmark::State& state) {
  auto ctx = make_exterior_context(3, 1, 1);
  const GrassmannElement x = xi(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * x * x);
  }
}
BENCHMARK(BM_XiPower);

void BM_VerifyCaseC(benchmark::State& state) {
  CaseConfig cfg = CaseConfig::case_c(2, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem(TheoremId::C1, cfg, 2));
  }
}
BENCHMARK(BM_VerifyCaseC);

void BM_Classical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_classical(n));
  }
}
BENCHMARK(BM_Classical)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
