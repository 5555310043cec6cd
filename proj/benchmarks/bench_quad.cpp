#include <cmath>

#include "benchmark/benchmark.h"
#include "mordell/quad.hpp"

using namespace mordell;

static void BM_GaussianHalfLine(benchmark::State& state) {
  quad::QuadConfig cfg;
  for (auto _ : state) {
    auto r = quad::integrate_gaussian(
        [](double x) {
          return Complex(std::exp(-kPi * x * x) * std::sin(2.0 * x), 0.0);
        },
        kPi, quad::Domain::positive_axis, cfg);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_GaussianHalfLine);

static void BM_GaussianTightTolerance(benchmark::State& state) {
  quad::QuadConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  cfg.max_refinements = 24;
  for (auto _ : state) {
    auto r = quad::integrate_gaussian(
        [](double x) {
          return Complex(std::exp(-0.05 * x * x) * std::cos(1.3 * x), 0.0);
        },
        0.05, quad::Domain::full_line, cfg);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_GaussianTightTolerance);
