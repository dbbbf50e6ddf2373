#include <benchmark/benchmark.h>

#include "strat/report.hpp"
#include "strat/search.hpp"

using namespace strat;

namespace {

// Holds tuples exhaust the whole lattice, which is where parallelism pays.
const SurfaceParams kW = make_params(6, 4, 1, 3);
const SurfaceParams kL = make_params(3, 2, 7, 9);

void BM_find_fault_w(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_fault(kW, Field::Real, Condition::KuoVerdierW));
}
void BM_find_fault_serial_w(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_fault_serial(kW, Field::Real, Condition::KuoVerdierW));
}
void BM_find_fault_L(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_fault(kL, Field::Real, Condition::MostowskiL));
}
void BM_find_fault_serial_L(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(find_fault_serial(kL, Field::Real, Condition::MostowskiL));
}
void BM_sweep(benchmark::State& st) {
  SweepOptions opt;
  opt.n = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(sweep(opt));
}

}  // namespace

BENCHMARK(BM_find_fault_w)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_fault_serial_w)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_fault_L)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_find_fault_serial_L)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
