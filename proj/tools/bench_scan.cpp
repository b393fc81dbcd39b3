#include <benchmark/benchmark.h>

#include "membrane/scan.hpp"
#include "membrane/types.hpp"

namespace {

using membrane::ResidualGrid;

void run(benchmark::State& state, bool parallel) {
  const ResidualGrid grid = membrane::standard_grid(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const membrane::ModelParams prm =
      membrane::reduced_params(0.3, 0.2, 0.1, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        membrane::dilation_noether_grid_max(prm, grid, parallel));
  }
  state.SetItemsProcessed(state.iterations() * grid.rho.size() *
                          grid.psi.size() * grid.psi_p.size());
}

void BM_GridSerial(benchmark::State& state) { run(state, false); }
void BM_GridParallel(benchmark::State& state) { run(state, true); }

BENCHMARK(BM_GridSerial)->Arg(40)->Arg(120)->Arg(360);
BENCHMARK(BM_GridParallel)->Arg(40)->Arg(120)->Arg(360);

}  // namespace

BENCHMARK_MAIN();
