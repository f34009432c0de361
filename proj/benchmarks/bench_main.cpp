#include "ybfk/flow.hpp"
#include "ybfk/matgroup.hpp"
#include "ybfk/poisson.hpp"
#include "ybfk/rmatrix.hpp"
#include "ybfk/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ybfk;

void BM_CybeDefect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bivector r = jordanian_r(n).r;
  for (auto _ : state)
    benchmark::DoNotOptimize(cybe_defect(r));
}
BENCHMARK(BM_CybeDefect)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_JordanianConstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(jordanian_r(n));
}
BENCHMARK(BM_JordanianConstruction)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_LeafRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Bivector r = jordanian_r(n).r;
  Sampler sampler(0);
  const GroupElement g = sampler.group(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(leaf_rank(r, g));
}
BENCHMARK(BM_LeafRank)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// 1000 RK4 steps of the energy T12 on SL(2).
void BM_FlowRk4(benchmark::State& state) {
  const Bivector r = jordanian_r(2).r;
  const Polynomial h = Polynomial::parse("T12", 2);
  const Matrix<double> g0 = to_double(QMatrix::from_rows({{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}}));
  FlowOptions options;
  options.steps = 1000;
  for (auto _ : state)
    benchmark::DoNotOptimize(hamiltonian_flow(r, h, g0, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(options.steps));
}
BENCHMARK(BM_FlowRk4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
