// Copyright 2026 The kerrdimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference sweep vs the OpenMP sweep, plus the per-point kernels
// they are built from.

#include <benchmark/benchmark.h>

#include "kerrdimer/liouvillian.hpp"
#include "kerrdimer/model.hpp"
#include "kerrdimer/steady_state.hpp"
#include "kerrdimer/sweep.hpp"

namespace {

kerr::SweepConfig grid_config(int steps, int dim) {
  kerr::SweepConfig cfg;
  cfg.j_grid = {0.1, 10.0, steps, kerr::Spacing::log};
  cfg.u_grid = {0.1, 10.0, steps, kerr::Spacing::log};
  cfg.dim = dim;
  return cfg;
}

kerr::SuperOperator liouvillian_at(int dim) {
  kerr::ModelParams p;
  p.u_over_kappa = 1.0;
  p.j_over_kappa = 1.0;
  p.f_over_kappa = 0.1;
  p.dim = dim;
  return kerr::build_liouvillian(kerr::build_hamiltonian(p), 1.0, dim);
}

void BM_SweepSerial(benchmark::State& state) {
  const kerr::SweepConfig cfg = grid_config(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kerr::run_sweep_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepSerial)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const kerr::SweepConfig cfg = grid_config(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kerr::run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SweepParallel)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_AssembleLiouvillian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(liouvillian_at(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AssembleLiouvillian)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_NullspaceDense(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const kerr::SuperOperator l = liouvillian_at(d);
  for (auto _ : state) benchmark::DoNotOptimize(kerr::solve_nullspace(l, d, d, kerr::LinearBackend::dense));
}
BENCHMARK(BM_NullspaceDense)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NullspaceSparse(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const kerr::SuperOperator l = liouvillian_at(d);
  for (auto _ : state) benchmark::DoNotOptimize(kerr::solve_nullspace(l, d, d, kerr::LinearBackend::sparse));
}
BENCHMARK(BM_NullspaceSparse)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const kerr::SuperOperator l = liouvillian_at(4);
  for (auto _ : state) benchmark::DoNotOptimize(kerr::solve_evolve(l, 4, 4));
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
