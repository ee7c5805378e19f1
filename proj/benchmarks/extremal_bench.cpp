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

#include <random>
#include <vector>

#include "viscid/extremal.hpp"

namespace {

using viscid::AdjointTerminal;
using viscid::ModelParams;
using viscid::Vec;

std::vector<AdjointTerminal> random_costates(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  std::vector<AdjointTerminal> out;
  for (std::size_t i = 0; i < count; ++i) {
    Vec lam(n), eta(n);
    for (std::size_t j = 0; j < n; ++j) {
      lam[j] = g(rng);
      eta[j] = g(rng);
    }
    out.push_back({lam, eta});
  }
  return out;
}

void BM_ExtremalState(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ModelParams params;
  params.n = n;
  params.v0 = 0.4;
  const auto ps = random_costates(n, 256);
  for (auto _ : state) {
    for (const auto& p : ps) benchmark::DoNotOptimize(viscid::extremal_state(1.3, 2.0, p, params));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}
BENCHMARK(BM_ExtremalState)->Arg(2)->Arg(3)->Arg(8);

void BM_ProjectionBoundary(benchmark::State& state) {
  ModelParams params;
  params.v0 = 0.4;
  const std::size_t coords[] = {0, 3};
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(viscid::projection_boundary(1.5, params, coords, m, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProjectionBoundary)->Arg(256)->Arg(4096);

}  // namespace
