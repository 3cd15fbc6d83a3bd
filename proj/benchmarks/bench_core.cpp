#include <benchmark/benchmark.h>

#include "catsim/fock.hpp"
#include "catsim/optimizer.hpp"
#include "catsim/wigner.hpp"

using namespace catsim;

static void BM_DisplacementOp(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(displacement_op(Complex(0.4, 1.3), dim));
}
BENCHMARK(BM_DisplacementOp)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_DisplaceVector(benchmark::State& state) {
  const StateVector v = coherent(Complex(0.0, 1.5), 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(displace(v, Complex(0.3, -2.0)));
}
BENCHMARK(BM_DisplaceVector)->Unit(benchmark::kMicrosecond);

static void BM_FidelityAmplitudes(benchmark::State& state) {
  CVector psi(3);
  psi << 1.0, Complex(0.0, 0.2), 0.55;
  for (auto _ : state)
    benchmark::DoNotOptimize(fidelity_sq_amplitudes(2, kEvenQ, 1.3, 100, psi, Complex(0.0, 0.1), -0.3));
}
BENCHMARK(BM_FidelityAmplitudes)->Unit(benchmark::kMicrosecond);

static void BM_MaximizeOrder2(benchmark::State& state) {
  OptConfig c;
  c.restarts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize(2, kOddQ, 1.4, c));
}
BENCHMARK(BM_MaximizeOrder2)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_NumericWignerPoint(benchmark::State& state) {
  const NumericWigner w(outer(scs(kOddQ, 1.4, 100)));
  for (auto _ : state)
    benchmark::DoNotOptimize(w({0.3, -0.7}));
}
BENCHMARK(BM_NumericWignerPoint)->Unit(benchmark::kMicrosecond);

static void BM_AnalyticGrid(benchmark::State& state) {
  const TargetCat t{1.4, kEvenQ, Complex(0.0, -1.32164), -0.40712};
  for (auto _ : state)
    benchmark::DoNotOptimize(make_grid(DsscsSource{+1, t}));
}
BENCHMARK(BM_AnalyticGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
