// Copyright 2026 The lrc-bounds Authors.
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

#include "lrc/asymptotic.hpp"
#include "lrc/bounds.hpp"
#include "lrc/constructions.hpp"
#include "lrc/locality.hpp"
#include "lrc/set_builder.hpp"

namespace lrc {
namespace {

void BM_MinDistanceSimplex(benchmark::State& state) {
  const LinearCode s = simplex(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(s));
}
BENCHMARK(BM_MinDistanceSimplex)->Args({4, 2})->Args({6, 2})->Args({3, 3})->Args({3, 4});

void BM_ComputeLocalityExample(benchmark::State& state) {
  const NamedCode ex = paper_example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_locality(ex.code, ex.delta));
}
BENCHMARK(BM_ComputeLocalityExample)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ComputeLocalitySimplex42(benchmark::State& state) {
  const LinearCode s = simplex(4, 2);
  const int delta = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_locality(s, delta, s.length()));
}
BENCHMARK(BM_ComputeLocalitySimplex42)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildSetSimplex42(benchmark::State& state) {
  const LinearCode s = simplex(4, 2);
  const LocalityProfile p = compute_locality(s, 4, s.length());
  for (auto _ : state) {
    for (int lambda = 0; lambda <= 4; ++lambda) benchmark::DoNotOptimize(build_low_entropy_set(s, p, lambda));
  }
}
BENCHMARK(BM_BuildSetSimplex42)->Unit(benchmark::kMillisecond);

void BM_FiniteBoundSweep(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long acc = 0;
    for (int n = 8; n <= 40; n += 4) {
      for (int d = 3; d <= n / 2; d += 2) {
        acc += bound_cmg_r(n, d, 4, 3, q).value + bound_cm_rdelta(n, d, 4, 3, q).value;
        acc += bound_cmg_kappa(n, d, 3, 3, q).value;
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FiniteBoundSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AsymptoticCurve(benchmark::State& state) {
  const auto grid = uniform_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double acc = 0;
    for (double x : grid) acc += asympt_cmg(x, 4, 3, 2, ROpt::mrrw);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AsymptoticCurve)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lrc

BENCHMARK_MAIN();
