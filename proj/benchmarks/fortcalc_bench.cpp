#include <benchmark/benchmark.h>

#include "fortcalc/analysis.hpp"
#include "fortcalc/dynamics.hpp"
#include "fortcalc/potentials.hpp"
#include "fortcalc/verify_suite.hpp"

namespace {

using namespace fortcalc;

InternalParams stamper_kurn() {
  const Preset p = load_preset("stamper_kurn_1998");
  return to_internal(p.params, p.beam);
}

void BM_PotentialPoint(benchmark::State& state) {
  const auto p = stamper_kurn();
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(potential_nonrwa(r, p, {}));
    r = r > 3.0 ? 0.0 : r + 1e-3;
  }
}
BENCHMARK(BM_PotentialPoint);

void BM_RadialScan(benchmark::State& state) {
  const auto p = stamper_kurn();
  const GridSpec grid{3.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(radial_scan(p, {}, {}, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RadialScan)->Arg(600)->Arg(6000);

void BM_TrapExtrema(benchmark::State& state) {
  const auto curve = radial_scan(stamper_kurn(), {}, {}, {3.0, 600});
  for (auto _ : state) benchmark::DoNotOptimize(trap_extrema(curve));
}
BENCHMARK(BM_TrapExtrema);

// Cost grows with max(|Δ|, Z)/Γ′, the number of oscillations per decay time.
void BM_AveragedNumeric(benchmark::State& state) {
  const auto p = desk_params(3.0, static_cast<double>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(averaged_coefficient_numeric(p, 2.0, {}));
}
BENCHMARK(BM_AveragedNumeric)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AveragedClosed(benchmark::State& state) {
  const auto p = desk_params(3.0, 10.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(averaged_coefficient_closed(2.0, p, {}));
}
BENCHMARK(BM_AveragedClosed);

void BM_VerifyQuick(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(Profile::kQuick, 42));
}
BENCHMARK(BM_VerifyQuick)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
