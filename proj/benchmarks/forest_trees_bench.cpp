#include <benchmark/benchmark.h>

#include "forest_trees/closed_form.hpp"
#include "forest_trees/kirchhoff.hpp"
#include "forest_trees/rng.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace ft = forest_trees;

namespace {

// A forest of K_{side,side} with about side components.
ft::ForestInstance sample_forest(ft::Count side) {
  return ft::random_forest({side, side}, side, 42);
}

ft::WeightedCompleteGraph random_graph(std::size_t k, std::uint64_t seed) {
  ft::Rng rng(seed);
  ft::WeightedCompleteGraph g(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) g.set_weight(i, j, rng.between(0, 5));
  return g;
}

}  // namespace

static void BM_ClosedForm(benchmark::State& state) {
  const auto side = static_cast<ft::Count>(state.range(0));
  const ft::ComponentProfile profile = ft::validate(sample_forest(side));
  for (auto _ : state) benchmark::DoNotOptimize(ft::tau_forest(side, side, profile));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(2)->Range(4, 256)->Complexity();

static void BM_KirchhoffOnContraction(benchmark::State& state) {
  const auto side = static_cast<ft::Count>(state.range(0));
  const ft::ForestInstance f = sample_forest(side);
  for (auto _ : state) benchmark::DoNotOptimize(ft::tau_kirchhoff(ft::contract_forest(f)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KirchhoffOnContraction)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_Bareiss(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const ft::IntegerMatrix minor = ft::laplacian_minor(random_graph(k, 7), 0);
  for (auto _ : state) benchmark::DoNotOptimize(ft::det_bareiss(minor));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bareiss)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

static void BM_InclusionExclusion(benchmark::State& state) {
  const ft::WeightedCompleteGraph g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ft::tau_inclusion_exclusion(g));
}
BENCHMARK(BM_InclusionExclusion)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_AltRecursion(benchmark::State& state) {
  const ft::WeightedCompleteGraph g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ft::tau_alt_recursion(g));
}
BENCHMARK(BM_AltRecursion)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
