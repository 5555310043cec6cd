#include "benchmark/benchmark.h"
#include "mordell/specfun.hpp"

using namespace mordell;
namespace sf = mordell::specfun;

static void BM_GammaComplex(benchmark::State& state) {
  Complex s(0.25, 12.5);
  for (auto _ : state) benchmark::DoNotOptimize(sf::gamma(s));
}
BENCHMARK(BM_GammaComplex);

static void BM_GammaLeftHalfPlane(benchmark::State& state) {
  Complex s(-10.3, 40.0);
  for (auto _ : state) benchmark::DoNotOptimize(sf::gamma(s));
}
BENCHMARK(BM_GammaLeftHalfPlane);

static void BM_ZetaCriticalLine(benchmark::State& state) {
  double t = static_cast<double>(state.range(0));
  Complex s(0.5, t);
  for (auto _ : state) benchmark::DoNotOptimize(sf::zeta(s));
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(5)->Arg(30)->Arg(120);

static void BM_XiCapital(benchmark::State& state) {
  Complex t(17.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(sf::xi_capital(t));
}
BENCHMARK(BM_XiCapital);

static void BM_Erf(benchmark::State& state) {
  Complex z(1.2, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(sf::erf(z));
}
BENCHMARK(BM_Erf);

BENCHMARK_MAIN();
