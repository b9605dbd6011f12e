// Serial reference paths against their OpenMP counterparts, plus the naive
// against the phase-batched constraint DP.

#include <benchmark/benchmark.h>

#include "stackprice/constraint_solver.hpp"
#include "stackprice/greedy.hpp"
#include "stackprice/objective_solver.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/random_instance.hpp"

using namespace stackprice;

namespace {

void BM_FillTable(benchmark::State& state) {
  const Instance inst = random_instance(Model::ObjectiveControl, 4, 64, 500, state.range(0), 1);
  const Parallelism par{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(fill_table(inst, par));
}
BENCHMARK(BM_FillTable)->ArgsProduct({{20000, 100000}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ObjectiveSolver(benchmark::State& state) {
  const Instance inst = random_instance(Model::ObjectiveControl, 20, 10, 60, state.range(0), 2);
  ObjectiveOptions opts;
  opts.parallelism.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_objective(inst, opts));
}
BENCHMARK(BM_ObjectiveSolver)->ArgsProduct({{500, 1500}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_ConstraintNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(Model::ConstraintControl, n, n / 4 + 1, 100, 1000, 3);
  std::uint64_t updates = 0;
  for (auto _ : state) updates = solve_constraint_naive(inst).cell_updates;
  state.counters["cell_updates"] = static_cast<double>(updates);
}
BENCHMARK(BM_ConstraintNaive)->Arg(64)->Arg(144)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ConstraintBatched(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(Model::ConstraintControl, n, n / 4 + 1, 100, 1000, 3);
  const Parallelism par{static_cast<int>(state.range(1))};
  std::uint64_t updates = 0;
  for (auto _ : state) updates = solve_constraint_batched(inst, par).cell_updates;
  state.counters["cell_updates"] = static_cast<double>(updates);
}
BENCHMARK(BM_ConstraintBatched)->ArgsProduct({{64, 144, 256}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const Instance inst = random_instance(Model::ObjectiveControl, 14, 8, 30, 80, 4);
  OracleOptions opts;
  opts.parallelism.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_objective(inst, opts));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
