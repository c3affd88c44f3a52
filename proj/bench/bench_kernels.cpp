// Serial reference vs OpenMP reduction for the partition-sum kernels.
// Run: bench_kernels --benchmark_counters_tabular=true
#include <benchmark/benchmark.h>

#include "quadra/levy.hpp"
#include "quadra/moments.hpp"
#include "quadra/sampling.hpp"

using namespace quadra;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "openmp" : "serial"); }

ParamValues<Rational> params() {
  return {Rational(1, 3), Rational(1, 2), Rational(-1, 5), Rational(2, 3)};
}

void BM_GaussianWick(benchmark::State& st) {
  Sampler rng(1);
  GaussianSpec spec{Space::euclidean(2, 2), {}};
  for (int k = 0; k < 10; ++k) spec.vectors.push_back({rng.vector(2), rng.vector(2)});
  auto P = params();
  partition_table(10, 2, 2);  // table build is cached; keep it out of the timing
  for (auto _ : st) benchmark::DoNotOptimize(gaussian_wick(spec, P, mode(st)));
  label(st);
}

void BM_GaussianWickSymbolic(benchmark::State& st) {
  VectorPair x{{Rational(1)}, {Rational(1)}};
  GaussianSpec spec{Space::euclidean(1, 1), std::vector<VectorPair>(10, x)};
  auto P = poly_values(DeformationParams::symbolic());
  partition_table(10, 2, 2);
  for (auto _ : st) benchmark::DoNotOptimize(gaussian_wick(spec, P, mode(st)));
  label(st);
}

void BM_FullWick(benchmark::State& st) {
  Sampler rng(2);
  QuadrabasicSpec spec;
  spec.space = Space::euclidean(2, 2);
  for (int k = 0; k < 8; ++k) {
    spec.vectors.push_back({rng.vector(2), rng.vector(2)});
    spec.gauges.push_back({rng.symmetric(2), rng.symmetric(2)});
    spec.lambdas.emplace_back(rng.rational(), rng.rational());
  }
  auto P = params();
  partition_table(8, 1);
  for (auto _ : st) benchmark::DoNotOptimize(full_wick(spec, P, mode(st)));
  label(st);
}

void BM_LevyMoment(benchmark::State& st) {
  Sampler rng(3);
  std::vector<std::vector<Rational>> xi;
  std::vector<RatMatrix> T;
  std::vector<Rational> lam;
  for (int k = 0; k < 2; ++k) {
    xi.push_back(rng.vector(3));
    T.push_back(rng.symmetric(3));
    lam.push_back(rng.rational());
  }
  auto spec = LevySpec::make(xi, T, lam);
  const VarWord w{0, 1, 1, 0, 1, 0, 0, 1};
  auto P = params();
  partition_table(8, 1);
  for (auto _ : st) benchmark::DoNotOptimize(levy_moment(spec, w, Rational(3, 2), P, mode(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_GaussianWick)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GaussianWickSymbolic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FullWick)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LevyMoment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
