// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "esd/esd.hpp"
#include "esd/sampling.hpp"

namespace {

static void BM_HermitianEig4(benchmark::State& state) {
  esd::sampling::Rng rng(7);
  const esd::ComplexMat h = esd::sampling::random_hermitian(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(esd::hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig4);

static void BM_ConcurrenceWootters(benchmark::State& state) {
  esd::sampling::Rng rng(11);
  const esd::DensityMatrix rho = esd::sampling::random_density_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(esd::concurrence_wootters(rho).value());
}
BENCHMARK(BM_ConcurrenceWootters);

static void BM_ClosedFormConcurrence(benchmark::State& state) {
  const esd::Scenario s{esd::XStateParams{0.1, 0.4, 0.4, 0.1, 0.2}, {esd::NoiseKind::Depolarizing, 1.0}};
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(esd::closed_form_concurrence(s, tau).value());
    tau = tau > 10.0 ? 0.0 : tau + 1e-3;
  }
}
BENCHMARK(BM_ClosedFormConcurrence);

static void BM_NumericTrajectory(benchmark::State& state) {
  const esd::Scenario s{esd::XStateParams{0.1, 0.4, 0.4, 0.1, 0.2}, {esd::NoiseKind::Amplitude, 1.0}};
  const std::vector<double> grid = esd::uniform_grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(esd::numeric_trajectory(s, grid).c.back());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NumericTrajectory)->RangeMultiplier(4)->Range(64, 2048)->Unit(benchmark::kMillisecond);

static void BM_Bisection(benchmark::State& state) {
  const esd::Scenario s{esd::XStateParams{0.1, 0.4, 0.4, 0.1, 0.2}, {esd::NoiseKind::Amplitude, 1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(esd::esd_time_bisection(s).tau_death);
}
BENCHMARK(BM_Bisection)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
