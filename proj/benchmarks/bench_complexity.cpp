// Copyright 2026 The phasecx Authors
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
//
#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "phasecx/phasecx.hpp"

namespace {

using namespace phasecx;

void BM_IntegratePlaneGaussian(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.target_rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const QuadResult r = integrate_plane(
        [](PhasePoint p) { return std::exp(-p.x * p.x - 2 * p.y * p.y); }, {0.3, -0.2}, 1.0, cfg);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegratePlaneGaussian)->Arg(6)->Arg(8)->Arg(10);

void BM_SampleHusimi(benchmark::State& state, StateSpec spec) {
  const PhaseSpaceDistribution w(validate(std::move(spec)));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.5);
  for (auto _ : state) {
    const FieldSample s = w.sample({n(rng), n(rng)});
    benchmark::DoNotOptimize(s.value);
  }
}
BENCHMARK_CAPTURE(BM_SampleHusimi, squeezed_thermal, StateSpec{Gaussian{0.5, 0.8, 0.3, {1.0, 0.5}}});
BENCHMARK_CAPTURE(BM_SampleHusimi, cat, StateSpec{Cat{{2.0, 0.5}, 1.0}});
BENCHMARK_CAPTURE(BM_SampleHusimi, photon_added_coherent, StateSpec{PhotonAddedCoherent{{1.0, 0.0}}});

void BM_SampleFockMatrix(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const PhaseSpaceDistribution w(validate(random_fock_matrix(static_cast<int>(state.range(0)), rng)));
  for (auto _ : state) benchmark::DoNotOptimize(w.sample({0.4, -0.9}).value);
}
BENCHMARK(BM_SampleFockMatrix)->Arg(4)->Arg(12)->Arg(32);

void BM_ComplexityFock(benchmark::State& state) {
  const CheckedState st = validate(Fock{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(complexity(st).complexity);
}
BENCHMARK(BM_ComplexityFock)->Arg(1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ComplexityCat(benchmark::State& state) {
  const CheckedState st = validate(Cat{{0.5 * static_cast<double>(state.range(0)), 0.0}, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(complexity(st).complexity);
}
BENCHMARK(BM_ComplexityCat)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OrderedFock(benchmark::State& state) {
  const CheckedState st = validate(Fock{2});
  for (auto _ : state) benchmark::DoNotOptimize(s_complexity(st, -3.0).complexity);
}
BENCHMARK(BM_OrderedFock)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
