// Serial reference against the OpenMP kernels. Both produce identical exact
// values; only the reduction shape differs.

#include <benchmark/benchmark.h>

#include "stabenv/closedform.hpp"
#include "stabenv/paths.hpp"
#include "stabenv/simplex.hpp"

using namespace stabenv;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_LocalizationSum(benchmark::State& state) {
  FixedPoint p = make_fixed_point(6, 2, {2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(localization_sum(p, Chamber::identity(6), mode(state)));
  }
  label(state);
}

void BM_ZLimit(benchmark::State& state) {
  FixedPoint p = make_fixed_point(7, 3, {2, 4, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_via_z_limit(p, mode(state)));
  }
  label(state);
}

void BM_ClosedForm(benchmark::State& state) {
  FixedPoint p = make_fixed_point(9, 3, {2, 5, 7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_integral(p, mode(state)));
  }
  label(state);
}

void BM_StabClass(benchmark::State& state) {
  FixedPoint p = make_fixed_point(6, 3, {1, 3, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(stab_class(p, Chamber::identity(6), mode(state)));
  }
  label(state);
}

void BM_PathSum(benchmark::State& state) {
  BoxPartition lam = make_partition(6, 2, {2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_sum(lam, mode(state)));
  }
  label(state);
}

void BM_LayerBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_layer_k(8, 3, LayerSource::closed_form, mode(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_LocalizationSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZLimit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabClass)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayerBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
