// Copyright 2026 The Authors.
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


// Serial reference path against the OpenMP path for the three parallel
// kernels.

#include <benchmark/benchmark.h>

#include "mlz/enumerate.hpp"
#include "mlz/morphism.hpp"
#include "mlz/verify.hpp"

namespace {

using mlz::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(1) ? Execution::kParallel : Execution::kSerial;
}

void BM_EnumerateMatroids(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlz::enumerate_matroids(n, std::nullopt, mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_EnumerateMatroids)
    ->ArgsProduct({{4, 5, 6}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateMorphisms(benchmark::State& state) {
  const mlz::Matroid source =
      mlz::uniform(static_cast<int>(state.range(0)) - 2,
                   static_cast<int>(state.range(0)));
  const std::vector<mlz::Matroid> targets = mlz::morphism_targets();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mlz::enumerate_morphisms(source, targets, mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_EnumerateMorphisms)
    ->ArgsProduct({{4, 5}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
  mlz::SurveyOptions o;
  o.n_max = static_cast<int>(state.range(0));
  o.morphisms = false;
  o.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlz::survey(o, 1));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_Survey)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
