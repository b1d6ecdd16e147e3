#include "dirlap/cheeger.hpp"
#include "dirlap/generators.hpp"
#include "dirlap/operators.hpp"
#include "dirlap/spectra.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace dirlap;

namespace {

Graph line64() { return gen_z_line(64); }

std::vector<int> exterior(const Graph& g, int n) {
  std::vector<int> out;
  for (int l = -63; l <= 63; ++l)
    if (std::abs(l) >= n) out.push_back(*g.index_of(VertexId(l)));
  return out;
}

void bm_assemble(benchmark::State& state) {
  Graph g = line64();
  std::vector<int> interior = g.interior();
  for (auto _ : state) {
    WeightedOperator op = assemble(g, interior, OpKind::S);
    benchmark::DoNotOptimize(op.matrix.data());
  }
}
BENCHMARK(bm_assemble);

void bm_cheeger_exact(benchmark::State& state) {
  Graph g = line64();
  std::vector<int> omega;
  for (int l = 1; l <= static_cast<int>(state.range(0)); ++l)
    omega.push_back(*g.index_of(VertexId(l)));
  for (auto _ : state) {
    CheegerResult res = cheeger_exact(g, omega);
    benchmark::DoNotOptimize(res.h_d);
  }
}
BENCHMARK(bm_cheeger_exact)->Arg(12)->Arg(16)->Arg(20);

void bm_cheeger_heuristic(benchmark::State& state) {
  Graph g = line64();
  std::vector<int> omega = exterior(g, 4);
  for (auto _ : state) {
    CheegerResult res = cheeger_heuristic(g, omega);
    benchmark::DoNotOptimize(res.h_d);
  }
}
BENCHMARK(bm_cheeger_heuristic);

void bm_lambda1(benchmark::State& state) {
  Graph g = line64();
  WeightedOperator op = assemble(g, exterior(g, 4), OpKind::S);
  for (auto _ : state) benchmark::DoNotOptimize(lambda1_symmetric(op));
}
BENCHMARK(bm_lambda1);

void bm_range_sweep(benchmark::State& state) {
  Graph g = gen_directed_cycle(48, 2, Rational(1, 2));
  WeightedOperator op = assemble(g, g.interior(), OpKind::delta);
  for (auto _ : state) {
    RangeSweep sweep = numerical_range_boundary(op, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(sweep.support.data());
  }
}
BENCHMARK(bm_range_sweep)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
