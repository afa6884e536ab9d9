#include <benchmark/benchmark.h>

#include <chowsym/chow.hpp>
#include <chowsym/involution.hpp>
#include <chowsym/orbit.hpp>
#include <chowsym/smith.hpp>

#include <cstddef>
#include <random>
#include <span>

namespace {

void BM_EnumerateInvolutions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    chowsym::for_each_involution(m, false, [&](std::span<const int>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateInvolutions)->DenseRange(8, 14, 2);

void BM_CodimensionOracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto all = chowsym::enumerate_involutions(m, true);
  for (auto _ : state) {
    for (const auto& w : all) benchmark::DoNotOptimize(chowsym::orbit_codimension_oracle(w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_CodimensionOracle)->Arg(4)->Arg(6)->Arg(8);

void BM_OrbitGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  chowsym::GraphBuildOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto graph = chowsym::build_orbit_graph(n, true, options);
    benchmark::DoNotOptimize(graph.edges.data());
  }
}
BENCHMARK(BM_OrbitGraph)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Args({6, 1})
    ->Unit(benchmark::kMillisecond);

void BM_AllInvolutionGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto graph = chowsym::build_orbit_graph(n, false);
    benchmark::DoNotOptimize(graph.edges.data());
  }
}
BENCHMARK(BM_AllInvolutionGraph)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SmithForm(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-20, 20);
  chowsym::IntMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) a(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(chowsym::smith_normal_form(a));
}
BENCHMARK(BM_SmithForm)->RangeMultiplier(2)->Range(4, 32);

void BM_ChowGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chowsym::chow_group(n));
}
BENCHMARK(BM_ChowGroup)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
