#include <benchmark/benchmark.h>

#include "omlab/inclusion.hpp"
#include "omlab/norms.hpp"

namespace {

using omlab::GrowthFunction;
using omlab::YoungFunction;

void BM_InverseAnalytic(benchmark::State& state) {
  const auto y = YoungFunction::power(2);
  double s = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(y.inverse(s));
}
BENCHMARK(BM_InverseAnalytic);

void BM_InverseBracketed(benchmark::State& state) {
  const auto y = YoungFunction::sum(YoungFunction::power(1), YoungFunction::power_log(2));
  double s = 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(y.inverse(s));
}
BENCHMARK(BM_InverseBracketed);

omlab::SimpleRadialFunction sample(int levels) {
  std::vector<double> bp;
  std::vector<double> vals;
  for (int j = 0; j < levels; ++j) {
    bp.push_back(0.25 * (j + 1));
    vals.push_back(1.0 + (j % 3));
  }
  return {{0.0}, bp, vals};
}

void BM_LuxemburgLocal(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  const auto y = YoungFunction::power_log(1);
  const omlab::Ball ball({0.0}, 1.0);
  const auto method = state.range(1) ? omlab::SolveMethod::kBisection
                                     : omlab::SolveMethod::kPerLevel;
  for (auto _ : state) benchmark::DoNotOptimize(omlab::luxemburg_local(f, y, ball, method));
}
BENCHMARK(BM_LuxemburgLocal)->ArgsProduct({{1, 4, 8}, {0, 1}});

void BM_WeakLocal(benchmark::State& state) {
  const auto f = sample(static_cast<int>(state.range(0)));
  const auto y = YoungFunction::exp_minus_one();
  const omlab::Ball ball({0.0}, 1.5);
  const auto method = state.range(1) ? omlab::SolveMethod::kBisection
                                     : omlab::SolveMethod::kPerLevel;
  for (auto _ : state) benchmark::DoNotOptimize(omlab::weak_sst_local(f, y, ball, method));
}
BENCHMARK(BM_WeakLocal)->ArgsProduct({{1, 4, 8}, {0, 1}});

void BM_GlobalNorm(benchmark::State& state) {
  const auto spec = omlab::SpaceSpec::make(
      omlab::Variant::kSst, YoungFunction::sum(YoungFunction::power(1), YoungFunction::power(2)),
      GrowthFunction::power(0.5), 1);
  const auto f = sample(8);
  const auto radii = omlab::default_radii(f);
  for (auto _ : state) benchmark::DoNotOptimize(omlab::global_norm(f, spec, radii).value);
}
BENCHMARK(BM_GlobalNorm);

void BM_ReferenceSufficiency(benchmark::State& state) {
  const auto fx = omlab::reference_fixture(omlab::TheoremId::kSst);
  for (auto _ : state) benchmark::DoNotOptimize(omlab::verify_sufficiency(fx).passed);
}
BENCHMARK(BM_ReferenceSufficiency)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
