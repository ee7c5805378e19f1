// Copyright 2026 The viscid Authors
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

#include "viscid/solver.hpp"
#include "viscid/targets.hpp"

namespace {

viscid::Scenario lissajous_scenario(double v0) {
  viscid::ModelParams params;
  params.v0 = v0;
  params.ell = 0.1;
  params.lip = viscid::kLissajousLip;
  return {viscid::Problem::Position, params, viscid::lissajous_target()};
}

void BM_SolveSimple(benchmark::State& state) {
  const auto scenario = lissajous_scenario(0.5);
  viscid::SolveOptions opts;
  opts.eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        viscid::solve_intercept(scenario, viscid::EstimatorKind::Simple, opts));
  }
}
BENCHMARK(BM_SolveSimple)->Arg(1000)->Arg(1000000);

void BM_SolveBest(benchmark::State& state) {
  const auto scenario = lissajous_scenario(0.0);
  viscid::SolveOptions opts;
  opts.eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(viscid::solve_intercept(scenario, viscid::EstimatorKind::Best, opts));
  }
}
BENCHMARK(BM_SolveBest)->Arg(1000)->Arg(1000000);

}  // namespace
