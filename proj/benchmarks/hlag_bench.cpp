#include <benchmark/benchmark.h>

#include "hlag/families.hpp"
#include "hlag/freeness.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/partition.hpp"

using namespace hlag;

static void BM_EvalGrad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Hypergraph g = complete(n, 4);
  const Weighting x = uniform_weighting(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(g, x));
    benchmark::DoNotOptimize(grad(g, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_EvalGrad)->Arg(8)->Arg(12)->Arg(16);

static void BM_MaximizeK7(benchmark::State& state) {
  const Hypergraph g = complete(7, 4);
  SolverConfig cfg;
  cfg.method = static_cast<Method>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maximize(g, cfg).value);
}
BENCHMARK(BM_MaximizeK7)
    ->Arg(static_cast<int>(Method::MultistartAscent))
    ->Arg(static_cast<int>(Method::SupportEnum))
    ->Unit(benchmark::kMillisecond);

static void BM_MaximizeCase(benchmark::State& state) {
  const Hypergraph g = case_family(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(maximize(g).value);
}
BENCHMARK(BM_MaximizeCase)->Arg(1)->Arg(7)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_MatchingNumber(benchmark::State& state) {
  const Hypergraph g = complete(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->Arg(9)->Arg(12);

static void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_left_compressed_free(n, 4, 2));
}
BENCHMARK(BM_Enumerate)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveSigma(benchmark::State& state) {
  const Hypergraph g = split(static_cast<int>(state.range(0)), 4);
  PartitionConfig cfg;
  cfg.mode = PartitionConfig::Mode::Exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(min_sigma_partition(g, cfg).sigma);
}
BENCHMARK(BM_ExhaustiveSigma)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
