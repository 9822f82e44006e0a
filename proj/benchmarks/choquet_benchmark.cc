// Copyright 2026 The Choquet-Jensen Authors. All Rights Reserved.
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


#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "choquet/capacity.h"
#include "choquet/integral.h"
#include "choquet/premium.h"
#include "choquet/sampling.h"
#include "choquet/theorem_lab.h"
#include "choquet/utility.h"

namespace choquet {
namespace {

constexpr std::uint64_t kSeed = 20260101;

void BM_GenChoquet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(kSeed);
  const Capacity mu = RandomCapacity(n, rng);
  const Capacity nu = RandomCapacity(n, rng);
  const RandomVariable x = RandomOutcome(n, -2.0, 2.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(GenChoquet(mu, nu, x));
}
BENCHMARK(BM_GenChoquet)->DenseRange(2, 12, 2);

void BM_RiemannOracle(benchmark::State& state) {
  Rng rng(kSeed);
  const Capacity mu = RandomCapacity(4, rng);
  const Capacity nu = RandomCapacity(4, rng);
  const RandomVariable x = RandomOutcome(4, -2.0, 2.0, rng);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RiemannOracle(mu, nu, x, step));
}
BENCHMARK(BM_RiemannOracle)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EnumerateCapacities(benchmark::State& state) {
  const CapacityEnumerator enumerator(static_cast<int>(state.range(0)),
                                      CapacityEnumerator::DefaultLevels());
  for (auto _ : state) {
    std::size_t count = 0;
    enumerator.ForEach([&](const Capacity&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCapacities)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Premium(benchmark::State& state) {
  Rng rng(kSeed);
  const int n = static_cast<int>(state.range(0));
  const Capacity mu = RandomCapacity(n, rng);
  const Scenario s{1.0, RandomOutcome(n, -1.0, 1.0, rng), mu, Dual(mu),
                   UtilityFunction::MakeExponential(1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(Premium(s));
}
BENCHMARK(BM_Premium)->Arg(2)->Arg(6);

void BM_RiskNeutralPremium(benchmark::State& state) {
  Rng rng(kSeed);
  const int n = static_cast<int>(state.range(0));
  const Capacity mu = RandomCapacity(n, rng);
  const Capacity nu = Dual(mu);
  const RandomVariable x = RandomOutcome(n, -1.0, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(RiskNeutralPremium(2.0, x, mu, nu));
}
BENCHMARK(BM_RiskNeutralPremium)->Arg(2)->Arg(6);

void BM_FullReport(benchmark::State& state) {
  ReportOptions options;
  options.levels = {0.0, 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(RunFullReport(options).swept_pairs);
}
BENCHMARK(BM_FullReport)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace choquet

BENCHMARK_MAIN();
