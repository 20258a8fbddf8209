#include <benchmark/benchmark.h>

#include <cmath>

#include "diskwalk/dimension_walks.hpp"
#include "diskwalk/families.hpp"
#include "diskwalk/hermitian.hpp"
#include "diskwalk/positivity.hpp"
#include "diskwalk/quadrature.hpp"

using namespace diskwalk;

static void BM_DiscPoly(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const DiskPoint z(0.3, -0.4);
  for (auto _ : state) {
    complex s{};
    for (int m = 0; m <= degree; ++m) s += disc_poly({m, degree - m, 1.0}, z);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_DiscPoly)->Arg(8)->Arg(32);

static void BM_BuildRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rule(0.5, order, 2 * order));
}
BENCHMARK(BM_BuildRule)->Arg(16)->Arg(64);

static void BM_ExpandExponential(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto rule = default_rule(0.0, degree, degree);
  auto f = [](complex z) { return std::exp(z + std::conj(z)); };
  for (auto _ : state) benchmark::DoNotOptimize(expand(f, 0.0, degree, degree, rule));
}
BENCHMARK(BM_ExpandExponential)->Arg(4)->Arg(8);

static void BM_GramEigenvalues(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const FamilySpec spec{Exponential{}, 2};
  const auto g = gram_matrix([&](complex z) { return eval_family(spec, DiskPoint(z)); },
                             sample_sphere(2, points, 42));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(g));
}
BENCHMARK(BM_GramEigenvalues)->Arg(40)->Arg(120);

static void BM_SpdVerdict(benchmark::State& state) {
  const IndexSet set({0, 3}, {{4, 5}, {-1, -7}, {2, 9}});
  for (auto _ : state) benchmark::DoNotOptimize(spd_verdict(set));
}
BENCHMARK(BM_SpdVerdict);
BENCHMARK_MAIN();
