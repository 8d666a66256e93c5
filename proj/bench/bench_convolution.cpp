#include <benchmark/benchmark.h>

#include <random>

#include "sedwave/operators.hpp"

using namespace sedwave;

namespace {

DensityField random_field(const Grid& g) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::vector<double> v(g.size());
  for (auto& x : v) x = u(rng);
  return DensityField(g, std::move(v), 100.0, 0.0);
}

Grid grid_for(benchmark::State& state) { return Grid::from_range(-50.0, 150.0, static_cast<std::size_t>(state.range(0))); }

void BM_convolve_parallel(benchmark::State& state) {
  const Grid g = grid_for(state);
  const ConvolutionStencil st(Kernel::gaussian(1.0), g.dx());
  const auto u = random_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(u, st));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_convolve_reference(benchmark::State& state) {
  const Grid g = grid_for(state);
  const ConvolutionStencil st(Kernel::gaussian(1.0), g.dx());
  const auto u = random_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_reference(u, st));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

void BM_apply_Q_two_kernels(benchmark::State& state) {
  const Grid g = grid_for(state);
  ModelParams p;
  p.p_A = 0.8;
  p.p_J = 0.8;
  const OperatorContext ctx(p, Fecundity::beverton_holt(p), Kernel::gaussian(0.5), Kernel::gaussian(1.5), g);
  const auto u = random_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(apply_Q(u, ctx));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

}  // namespace

BENCHMARK(BM_convolve_parallel)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(BM_convolve_reference)->Arg(1024)->Arg(4096)->Arg(16384);
BENCHMARK(BM_apply_Q_two_kernels)->Arg(4096)->Arg(16384);

BENCHMARK_MAIN();
