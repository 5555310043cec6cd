#include "benchmark/benchmark.h"
#include "mordell/asympt.hpp"
#include "mordell/identities.hpp"

using namespace mordell;
namespace id = mordell::identities;

static void BM_Erf1Side(benchmark::State& state) {
  quad::QuadConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(id::erf1_side(2.0, {1.0, 0.0}, cfg).value);
}
BENCHMARK(BM_Erf1Side);

static void BM_XiSide(benchmark::State& state) {
  quad::QuadConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(id::xi_side_erf1(2.0, {1.0, 0.0}, cfg).value);
}
BENCHMARK(BM_XiSide);

static void BM_VerifyErf1(benchmark::State& state) {
  id::IdentityCase c;
  c.id = id::Identity::erf1;
  c.alpha = 1.0;
  c.z = {1.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(id::verify(c).passed);
}
BENCHMARK(BM_VerifyErf1);

static void BM_TableCell(benchmark::State& state) {
  quad::QuadConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.max_refinements = 20;
  int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        id::laguerre_bose_integral(2 * k, 1.5, quad::Domain::full_line, cfg).value);
}
BENCHMARK(BM_TableCell)->Arg(1)->Arg(10);

static void BM_SigmaResolvent(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(asympt::sigma_resolvent_sum(0.4, {0.5, 0.0}));
}
BENCHMARK(BM_SigmaResolvent);
