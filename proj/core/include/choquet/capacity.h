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
// Capacities (normalized monotone set functions) on finite ground sets.
//
// A ground set of n elements is identified with {0, ..., n-1}; subsets are
// bitmasks in [0, 2^n). Every Capacity holds the full 2^n table and is
// validated on construction, so a Capacity value always satisfies
// mu(empty) = 0, mu(ground) = 1 and mu(A) <= mu(B) for A subset of B.

#ifndef CHOQUET_CAPACITY_H_
#define CHOQUET_CAPACITY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace choquet {

class WeightingFunction;

using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 20;

class GroundSet {
 public:
  // Throws kInvalidArgument unless 1 <= n <= kMaxGroundSize and labels is
  // either empty or has exactly n distinct entries.
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  Subset full() const { return static_cast<Subset>((std::uint64_t{1} << n_) - 1); }
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  Subset Complement(Subset a) const { return full() & ~a; }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  // Label of element i; 1-based index when the set is unlabeled.
  std::string Label(int i) const;
  // "{a,b}" style rendering of a subset.
  std::string Format(Subset a) const;

  // Same size, and same labels when both sides carry labels.
  bool CompatibleWith(const GroundSet& other) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

class Capacity {
 public:
  // Validates and takes ownership of the table (indexed by bitmask).
  // Endpoint values within kStructuralTol of 0/1 are snapped to exactly 0/1.
  // Throws kInvalidArgument (size, NaN), kNotMonotone (message names the
  // violating pair A subset of B; checked first) or kNotNormalized.
  static Capacity Create(GroundSet ground, std::vector<double> table);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  double operator()(Subset a) const { return table_[a]; }
  std::span<const double> table() const { return table_; }

  // Entrywise comparison within kStructuralTol.
  friend bool operator==(const Capacity& a, const Capacity& b);

 private:
  Capacity(GroundSet ground, std::vector<double> table)
      : ground_(std::move(ground)), table_(std::move(table)) {}

  GroundSet ground_;
  std::vector<double> table_;
};

class MassFunction {
 public:
  // mass[empty] = 0, all entries >= 0, total 1 within kStructuralTol.
  static MassFunction Create(GroundSet ground, std::vector<double> mass);

  const GroundSet& ground() const { return ground_; }
  double operator()(Subset a) const { return mass_[a]; }
  std::span<const double> mass() const { return mass_; }

 private:
  MassFunction(GroundSet ground, std::vector<double> mass)
      : ground_(std::move(ground)), mass_(std::move(mass)) {}

  GroundSet ground_;
  std::vector<double> mass_;
};

struct SubsetPair {
  Subset first = 0;
  Subset second = 0;
};

// Checks covering pairs (A, A u {i}) only; that is enough for monotonicity.
std::optional<SubsetPair> FindMonotonicityViolation(std::span<const double> table,
                                                    int n, double tol);

// conj(mu)(A) = 1 - mu(A^c).
Capacity Dual(const Capacity& mu);

Capacity FromProbability(std::span<const double> weights);
Capacity FromProbability(const GroundSet& ground, std::span<const double> weights);

// mu(A) = g(P(A)) for an additive P. Throws kNotAdditive otherwise.
Capacity Distort(const Capacity& probability, const WeightingFunction& g);
Capacity Distort(const Capacity& probability,
                 const std::function<double(double)>& g);

// theta * min_P P(A) + (1 - theta) * max_P P(A).
Capacity Hurwicz(std::span<const Capacity> family, double theta);

// sup over the empty set is 0 in both constructors.
Capacity Possibility(std::span<const double> psi);
Capacity Necessity(std::span<const double> psi);

// 1 on supersets of the coalition, 0 elsewhere.
Capacity Unanimity(const GroundSet& ground, Subset coalition);

Capacity Belief(const MassFunction& m);
Capacity Plausibility(const MassFunction& m);

// (max_A v + 1 - max_{A^c} v) / 2; requires max v = 1.
Capacity Credibility(std::span<const double> v);

bool IsAdditive(const Capacity& mu, double tol = 1e-12);
bool IsZeroOneValued(const Capacity& mu);

struct SuperadditivityResult {
  bool holds = true;
  // Disjoint pair with mu(A) + mu(B) > mu(A u B) + tol, when !holds.
  std::optional<SubsetPair> witness;
  double gap = 0.0;
};
SuperadditivityResult CheckSuperadditive(const Capacity& mu, double tol = 1e-12);

struct DominanceResult {
  bool holds = true;
  // Subset maximizing mu(A) - conj(nu)(A) (lowest bitmask on ties).
  Subset worst = 0;
  double worst_gap = 0.0;
};
// mu <= conj(nu), i.e. mu(A) + nu(A^c) <= 1 for every A.
// Throws kGroundSetMismatch.
DominanceResult DominatesDual(const Capacity& mu, const Capacity& nu);

// A set B with mu(B) > 0 and nu(B^c) > 0, if one exists.
std::optional<Subset> FindCoexistenceSet(const Capacity& mu, const Capacity& nu);

enum class UncertaintyAxiom { kNormalization, kSelfDuality, kSubadditivity };
const char* UncertaintyAxiomName(UncertaintyAxiom axiom);

struct UncertaintyCheck {
  bool holds = true;
  std::optional<UncertaintyAxiom> failing;
  SubsetPair witness;
};
// M1 normalization, M2 self-duality, M3 as pairwise subadditivity
// M(A u B) <= M(A) + M(B). On a finite ground set, countable subadditivity
// reduces to finitely many distinct sets and pairwise subadditivity extends
// to finite unions by induction, so the pairwise check is complete.
UncertaintyCheck CheckUncertaintyMeasure(const Capacity& m);

}  // namespace choquet

#endif  // CHOQUET_CAPACITY_H_
