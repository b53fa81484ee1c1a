#include <benchmark/benchmark.h>

#include "energylab/constructors.hpp"
#include "energylab/random.hpp"
#include "energylab/spectral.hpp"
#include "energylab/transform.hpp"

namespace el = energylab;

static void BM_EigenvaluesRandomRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = el::SymMatrix::adjacency(el::random_regular(n, 3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(el::eigenvalues_sym(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigenvaluesRandomRegular)->Arg(100)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_EigenvaluesCertified(benchmark::State& state) {
  const auto a = el::SymMatrix::adjacency(el::random_regular(static_cast<std::size_t>(state.range(0)), 3, 1));
  el::SolverOptions opts;
  opts.certify = true;
  for (auto _ : state) benchmark::DoNotOptimize(el::eigenvalues_sym(a, opts));
}
BENCHMARK(BM_EigenvaluesCertified)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  const auto a = el::SymMatrix::adjacency(el::random_regular(static_cast<std::size_t>(state.range(0)), 3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(el::jacobi_eigenvalues(a));
}
BENCHMARK(BM_Jacobi)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Paley(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(el::paley(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_Paley)->Arg(997)->Arg(4093)->Unit(benchmark::kMillisecond);

static void BM_RandomRegular(benchmark::State& state) {
  std::uint64_t seed = 0;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(el::random_regular(n, k, ++seed));
}
BENCHMARK(BM_RandomRegular)->Args({2000, 3})->Args({1000, 32})->Unit(benchmark::kMillisecond);

static void BM_Regularize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = el::random_graph(n, 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(el::regularize(g));
}
BENCHMARK(BM_Regularize)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_ExtendPaley(benchmark::State& state) {
  const auto h = el::paley(197);
  el::ExtendOptions opts;
  opts.compute_energies = false;
  for (auto _ : state) benchmark::DoNotOptimize(el::extend_regular(h, 200, opts));
}
BENCHMARK(BM_ExtendPaley)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
