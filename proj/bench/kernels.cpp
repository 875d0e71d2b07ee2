// Parallel kernels against their serial reference twins.

#include <benchmark/benchmark.h>

#include <cmath>

#include "wqed/dispersion.hpp"
#include "wqed/finite_lattice.hpp"
#include "wqed/numerics/quadrature.hpp"

using namespace wqed;

namespace {

constexpr double kPhi = 0.75 * kPi;
const WaveVector2 kXEdge{kPi, 0.0};

void BM_SampleDispersion(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sample_dispersion(kXEdge, kPhi, 501));
}
void BM_SampleDispersionSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::sample_dispersion_serial(kXEdge, kPhi, 501));
}

void BM_GapInterval(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(gap_interval(kXEdge, kPhi, 1001));
}
void BM_GapIntervalSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(reference::gap_interval_serial(kXEdge, kPhi, 1001));
}

std::vector<GapMapPoint> map_points() {
  const auto ks = linspace(-kPi, kPi, 5);
  return k_grid_sweep(kPhi, ks, ks);
}
void BM_GapMap(benchmark::State& st) {
  const auto pts = map_points();
  for (auto _ : st) benchmark::DoNotOptimize(gap_map(pts, 301));
}
void BM_GapMapSerial(benchmark::State& st) {
  const auto pts = map_points();
  for (auto _ : st) benchmark::DoNotOptimize(reference::gap_map_serial(pts, 301));
}

double resolvent(double qx, double qy) {
  return 1.0 / (2.0 - 0.9 * (std::cos(qx) + std::cos(qy)));
}
void BM_Integrate2D(benchmark::State& st) {
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  for (auto _ : st) benchmark::DoNotOptimize(numerics::integrate_2d(resolvent, spec));
}
void BM_Integrate2DSerial(benchmark::State& st) {
  numerics::QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  for (auto _ : st) benchmark::DoNotOptimize(reference::integrate_2d_serial(resolvent, spec));
}

void BM_AssemblePair(benchmark::State& st) {
  const ModelParams p(kPhi, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(assemble_pair_hamiltonian(p));
}
void BM_AssemblePairSerial(benchmark::State& st) {
  const ModelParams p(kPhi, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(reference::assemble_pair_hamiltonian_serial(p));
}

const TwoExcitationSpectrum& spectrum6() {
  static const TwoExcitationSpectrum s = solve_two_excitation(ModelParams(kPhi, 6));
  return s;
}
void BM_BuildReports(benchmark::State& st) {
  const auto& s = spectrum6();
  for (auto _ : st) benchmark::DoNotOptimize(build_reports(s));
}
void BM_BuildReportsSerial(benchmark::State& st) {
  const auto& s = spectrum6();
  for (auto _ : st) benchmark::DoNotOptimize(reference::build_reports_serial(s));
}

}  // namespace

BENCHMARK(BM_SampleDispersion)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleDispersionSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GapInterval)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GapIntervalSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GapMap)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GapMapSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Integrate2D)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Integrate2DSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssemblePair)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AssemblePairSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildReports)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildReportsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
