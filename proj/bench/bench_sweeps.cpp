// Serial reference sweeps against their OpenMP counterparts.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "afm/oracle.hpp"

namespace {

const std::vector<double> kGrid = {5, 10, 20, 40, 60, 80, 100};

void BM_spectrum_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::reference::bound_spectrum({100.0, 0.0}));
}
void BM_spectrum_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::bound_spectrum({100.0, 0.0}));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_spectra_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::reference::bound_spectra({1.0, -1.0}, kGrid));
}
void BM_spectra_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::bound_spectra({1.0, -1.0}, kGrid));
  st.counters["threads"] = omp_get_max_threads();
}

void BM_critical_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::reference::critical_height_table(0.0, 3, 3));
}
void BM_critical_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(afm::critical_height_table(0.0, 3, 3));
  st.counters["threads"] = omp_get_max_threads();
}

// One dense diagonalisation, the unit of work inside every sweep.
void BM_mesh(benchmark::State& st) {
  const afm::RadialPotential v{40.0, 0.0, true};
  const int size = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(afm::lagrange_mesh_eigenvalues(v, 1, size, 50.0));
}

}  // namespace

BENCHMARK(BM_spectrum_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_spectra_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectra_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_critical_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_critical_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_mesh)->Arg(200)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
