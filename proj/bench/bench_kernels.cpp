// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <vector>

#include "f2forms/counterexample.hpp"
#include "f2forms/kernels.hpp"
#include "f2forms/random.hpp"

using namespace f2forms;

namespace {

MultilinearForm bias_input(std::size_t n) {
  return build_phi(n);
}

void BM_ZeroContraction_Serial(benchmark::State& state) {
  const MultilinearForm f = bias_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::zero_contraction_count(f));
}

void BM_ZeroContraction_Parallel(benchmark::State& state) {
  const MultilinearForm f = bias_input(static_cast<std::size_t>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::zero_contraction_count(f, workers));
}

struct CountingInput {
  std::vector<BitMatrix> forms;
  Subspace subspace;
  BitVec shift;
};

CountingInput counting_input(std::size_t n) {
  Rng rng(7);
  CountingInput in{{rng.matrix(n, n), rng.matrix(n, n)}, Subspace::full(n), rng.vec(n)};
  return in;
}

void BM_CountValues_Serial(benchmark::State& state) {
  const CountingInput in = counting_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::count_values(in.forms, in.subspace, in.shift));
}

void BM_CountValues_Parallel(benchmark::State& state) {
  const CountingInput in = counting_input(static_cast<std::size_t>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::parallel::count_values(in.forms, in.subspace, in.shift, workers));
  }
}

struct LayerInput {
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> generators;
  std::vector<std::uint8_t> table;
};

LayerInput layer_input(std::size_t bits) {
  Rng rng(11);
  LayerInput in;
  for (int i = 0; i < 256; ++i) in.generators.push_back(rng.below(std::uint64_t{1} << bits));
  for (int i = 0; i < 4096; ++i) in.frontier.push_back(rng.below(std::uint64_t{1} << bits));
  in.table.assign(std::size_t{1} << bits, kernels::kUnreached);
  return in;
}

void BM_ExpandLayer_Serial(benchmark::State& state) {
  const LayerInput in = layer_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto table = in.table;
    kernels::serial::expand_layer(in.frontier, in.generators, table, 1);
    benchmark::DoNotOptimize(table.data());
  }
}

void BM_ExpandLayer_Parallel(benchmark::State& state) {
  const LayerInput in = layer_input(static_cast<std::size_t>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto table = in.table;
    kernels::parallel::expand_layer(in.frontier, in.generators, table, 1, workers);
    benchmark::DoNotOptimize(table.data());
  }
}

}  // namespace

BENCHMARK(BM_ZeroContraction_Serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZeroContraction_Parallel)->ArgsProduct({{4, 5}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountValues_Serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountValues_Parallel)->ArgsProduct({{8, 10}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandLayer_Serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandLayer_Parallel)->ArgsProduct({{16, 20}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
