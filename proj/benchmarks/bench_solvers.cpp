// Copyright 2026 The nvps Authors
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

#include <benchmark/benchmark.h>

#include <vector>

#include "nvps/evolve.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/odmr.hpp"
#include "nvps/steady_state.hpp"
#include "nvps/units.hpp"

namespace {

using namespace nvps;

void BM_LiouvillianBuild(benchmark::State& state) {
  const NVModel model{NVSetup{}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.liouvillian(units::hz_to_angular(2.87e9)));
  }
}
BENCHMARK(BM_LiouvillianBuild)->Unit(benchmark::kMicrosecond);

void BM_SteadyState(benchmark::State& state) {
  const NVModel model{NVSetup{}};
  const Liouvillian l = model.liouvillian(units::hz_to_angular(2.87e9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(steady_state(l));
  }
}
BENCHMARK(BM_SteadyState)->Unit(benchmark::kMillisecond);

void BM_OdmrPoint(benchmark::State& state) {
  const NVModel model{NVSetup{}};
  const std::vector<double> grid{2.87e9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(odmr_sweep(model, grid, 1));
  }
}
BENCHMARK(BM_OdmrPoint)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
  const NVModel model{NVSetup{}};
  const Liouvillian l = model.liouvillian();
  const std::vector<double> grid{0.0, state.range(0) * 1e-9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(model.spin_pm1_state(), l, grid));
  }
}
BENCHMARK(BM_Evolve)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
