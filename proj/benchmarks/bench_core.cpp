#include <vector>

#include "benchmark/benchmark.h"
#include "repstat/normal.hpp"
#include "repstat/power.hpp"
#include "repstat/rates.hpp"
#include "repstat/sceptical.hpp"

namespace {

void BM_normal_quantile(benchmark::State& state) {
  double p = 0.0001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(repstat::normal_quantile(p));
    p += 1e-7;
    if (p > 0.9999) p = 0.0001;
  }
}
BENCHMARK(BM_normal_quantile);

void BM_sceptical_p(benchmark::State& state) {
  double z_r = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(repstat::sceptical_p(2.3, z_r, 1.7));
    z_r += 1e-7;
    if (z_r > 4.0) z_r = 1.5;
  }
}
BENCHMARK(BM_sceptical_p);

void BM_recalibrated_sceptical_p(benchmark::State& state) {
  double z_r = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        repstat::recalibrated_sceptical_p(2.3, z_r, 1.7));
    z_r += 1e-7;
    if (z_r > 4.0) z_r = 1.5;
  }
}
BENCHMARK(BM_recalibrated_sceptical_p);

void BM_assess(benchmark::State& state) {
  const repstat::SuccessLevel lv = repstat::golden_level(0.025);
  double z_r = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(repstat::assess({2.3, z_r, 1.7}, lv));
    z_r += 1e-7;
    if (z_r > 4.0) z_r = 1.5;
  }
}
BENCHMARK(BM_assess);

void BM_t1e_quadrature(benchmark::State& state) {
  const repstat::SuccessLevel lv = repstat::golden_level(0.025);
  const double c = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(repstat::t1e_quadrature(c, lv));
  }
}
BENCHMARK(BM_t1e_quadrature)->Arg(5)->Arg(10)->Arg(50);

void BM_project_power_rs(benchmark::State& state) {
  const repstat::SuccessLevel lv = repstat::golden_level(0.025);
  const double c = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        repstat::project_power_rs({0.025, 0.1, c, lv, false}));
  }
}
BENCHMARK(BM_project_power_rs)->Arg(5)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
