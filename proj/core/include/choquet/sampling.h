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

// Seeded random generators for capacities and random variables. All draws
// go through Rng so that results are reproducible across standard libraries.

#ifndef CHOQUET_SAMPLING_H_
#define CHOQUET_SAMPLING_H_

#include <cstdint>
#include <random>
#include <utility>

#include "choquet/capacity.h"
#include "choquet/integral.h"

namespace choquet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform on {0, ..., count - 1}.
  std::uint64_t Index(std::uint64_t count) { return engine_() % count; }
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Monotone closure of independent uniform values: each subset takes the max
// of its own draw and its immediate subsets.
Capacity RandomCapacity(int n, Rng& rng);
Capacity RandomProbability(int n, Rng& rng);
// Upward closure of a few random nonempty generators.
Capacity RandomZeroOneCapacity(int n, Rng& rng);
// (mu, nu) with mu <= conj(nu): nu random, mu = min(random, conj(nu)).
std::pair<Capacity, Capacity> RandomDominancePair(int n, Rng& rng);

RandomVariable RandomOutcome(int n, double lo, double hi, Rng& rng);

}  // namespace choquet

#endif  // CHOQUET_SAMPLING_H_
