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

#include "choquet/sampling.h"

#include <algorithm>
#include <vector>

namespace choquet {
namespace {

// Raises every entry to the max over its immediate subsets, in bitmask
// order, which visits every subset after all of its subsets.
void MonotoneClosure(std::vector<double>& table, int n) {
  for (Subset a = 1; a < table.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << i;
      if (a & bit) table[a] = std::max(table[a], table[a & ~bit]);
    }
  }
}

}  // namespace

Capacity RandomCapacity(int n, Rng& rng) {
  const GroundSet ground(n);
  std::vector<double> table(ground.subset_count());
  for (double& v : table) v = rng.Uniform();
  table[0] = 0.0;
  table[ground.full()] = 1.0;
  MonotoneClosure(table, n);
  return Capacity::Create(ground, std::move(table));
}

Capacity RandomProbability(int n, Rng& rng) {
  std::vector<double> weights(n);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.Uniform() + 1e-3;
    total += w;
  }
  for (double& w : weights) w /= total;
  return FromProbability(weights);
}

Capacity RandomZeroOneCapacity(int n, Rng& rng) {
  const GroundSet ground(n);
  std::vector<double> table(ground.subset_count(), 0.0);
  const int generators = 1 + static_cast<int>(rng.Index(3));
  for (int k = 0; k < generators; ++k) {
    const Subset g = 1 + static_cast<Subset>(rng.Index(ground.full()));
    table[g] = 1.0;
  }
  table[ground.full()] = 1.0;
  MonotoneClosure(table, n);
  return Capacity::Create(ground, std::move(table));
}

std::pair<Capacity, Capacity> RandomDominancePair(int n, Rng& rng) {
  Capacity nu = RandomCapacity(n, rng);
  const Capacity rho = RandomCapacity(n, rng);
  const Capacity nu_bar = Dual(nu);
  std::vector<double> table(rho.table().begin(), rho.table().end());
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = std::min(table[a], nu_bar(a));
  return {Capacity::Create(nu.ground(), std::move(table)), std::move(nu)};
}

RandomVariable RandomOutcome(int n, double lo, double hi, Rng& rng) {
  std::vector<double> values(n);
  for (double& v : values) v = rng.Uniform(lo, hi);
  return RandomVariable(std::move(values));
}

}  // namespace choquet
