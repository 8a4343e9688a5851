// Serial reference against the OpenMP path for the enumeration kernels.
// Run with OMP_NUM_THREADS set to the core count; range(0) selects the path.

#include <benchmark/benchmark.h>

#include "sparsef2/codes.hpp"
#include "sparsef2/graph.hpp"
#include "sparsef2/kernels.hpp"
#include "sparsef2/reductions.hpp"
#include "sparsef2/solvers.hpp"

using namespace sparsef2;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::kParallel : Exec::kSerial; }

BitMat random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  BitMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
  }
  return m;
}

void BM_LightestCombination(benchmark::State& state) {
  const BitMat m = random_matrix(40, 60, 1);
  const kernels::ColumnPack cols(m.columns(), m.rows());
  const std::vector<std::uint64_t> target(cols.words(), 0);
  for (auto _ : state) {
    auto r = kernels::find_lightest_combination(cols, target, 1, 4, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LightestCombination)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CodewordWeights(benchmark::State& state) {
  const BitMat g = random_matrix(256, 18, 2);
  for (auto _ : state) benchmark::DoNotOptimize(codeword_weight_range(g, exec_of(state)));
}
BENCHMARK(BM_CodewordWeights)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolveExhaustive(benchmark::State& state) {
  const auto [inst, layout] = clique_to_vectorsum(random_graph(7, 0.3, 3), 3);
  SolveOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exhaustive(inst, opts));
}
BENCHMARK(BM_SolveExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SolveBfs(benchmark::State& state) {
  VectorSumInstance inst;
  inst.m = random_matrix(22, 40, 4);
  inst.b = inst.m.column(0) ^ inst.m.column(1) ^ inst.m.column(2) ^ inst.m.column(3) ^ inst.m.column(4);
  inst.k = 5;
  SolveOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bfs(inst, opts));
}
BENCHMARK(BM_SolveBfs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ParityAgreement(benchmark::State& state) {
  PointValueSet pv;
  pv.dim = 40;
  const BitMat pts = random_matrix(2000, 40, 5);
  pv.points = pts.row_list();
  Rng rng(6);
  for (std::size_t i = 0; i < pv.points.size(); ++i) pv.values.push_back(rng() & 1u);
  for (auto _ : state) benchmark::DoNotOptimize(best_parity_agreement(pv, 2, false, kDefaultEnumerationCap, exec_of(state)));
}
BENCHMARK(BM_ParityAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DistributionBias(benchmark::State& state) {
  const BitMat pts = random_matrix(1000, 30, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distribution_bias(pts.row_list(), 3, kDefaultEnumerationCap, exec_of(state)));
  }
}
BENCHMARK(BM_DistributionBias)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ProductDensity(benchmark::State& state) {
  for (auto _ : state) {
    LinearCode c = LinearCode::from_generator(random_matrix(12, 4, 8));
    benchmark::DoNotOptimize(product_density_check(c, std::uint64_t{1} << 20, exec_of(state)));
  }
}
BENCHMARK(BM_ProductDensity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
