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
#include "choquet/capacity.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include <fmt/format.h>

#include "choquet/error.h"
#include "choquet/tolerance.h"
#include "choquet/weighting.h"

namespace choquet {
namespace {

void RequireSameGround(const Capacity& a, const Capacity& b) {
  if (!a.ground().CompatibleWith(b.ground())) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("capacities live on ground sets of size {} and {}", a.n(),
                            b.n()));
  }
}

void RequireUnitInterval(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("{}[{}] = {} is outside [0, 1]", what, i + 1, values[i]));
    }
  }
}

double MaxOver(std::span<const double> values, Subset a) {
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (a & (Subset{1} << i)) best = std::max(best, values[i]);
  }
  return best;
}

}  // namespace

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("ground set size must be in [1, {}], got {}", kMaxGroundSize, n));
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("{} labels given for {} elements", labels_.size(), n));
    }
    const std::set<std::string> unique(labels_.begin(), labels_.end());
    if (static_cast<int>(unique.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "ground set labels must be distinct");
    }
  }
}

std::string GroundSet::Label(int i) const {
  return labels_.empty() ? std::to_string(i + 1) : labels_[i];
}

std::string GroundSet::Format(Subset a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (!(a & (Subset{1} << i))) continue;
    if (!first) out += ',';
    out += Label(i);
    first = false;
  }
  return out + "}";
}

bool GroundSet::CompatibleWith(const GroundSet& other) const {
  if (n_ != other.n_) return false;
  if (has_labels() && other.has_labels()) return labels_ == other.labels_;
  return true;
}

std::optional<SubsetPair> FindMonotonicityViolation(std::span<const double> table, int n,
                                                    double tol) {
  const Subset count = Subset{1} << n;
  for (Subset a = 0; a < count; ++a) {
    for (int i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << i;
      if (a & bit) continue;
      if (table[a] > table[a | bit] + tol) return SubsetPair{a, a | bit};
    }
  }
  return std::nullopt;
}

Capacity Capacity::Create(GroundSet ground, std::vector<double> table) {
  if (table.size() != ground.subset_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("table has {} entries, expected 2^{} = {}", table.size(),
                            ground.size(), ground.subset_count()));
  }
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!std::isfinite(table[a])) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("value at {} is not finite", ground.Format(a)));
    }
  }
  // Monotonicity first, so that a table such as {0, 0.6, 0.1, 0.5} reports
  // the violating pair rather than the endpoint.
  if (const auto bad = FindMonotonicityViolation(table, ground.size(), kStructuralTol)) {
    throw Error(ErrorCode::kNotMonotone,
                fmt::format("mu({}) = {} > mu({}) = {}", ground.Format(bad->first),
                            table[bad->first], ground.Format(bad->second),
                            table[bad->second]));
  }
  if (std::abs(table.front()) > kStructuralTol) {
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("mu({{}}) = {} but must be 0", table.front()));
  }
  if (std::abs(table.back() - 1.0) > kStructuralTol) {
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("mu(ground) = {} but must be 1", table.back()));
  }
  table.front() = 0.0;
  table.back() = 1.0;
  // Values are in [0, 1] up to tolerance once normalization and
  // monotonicity hold; clamp the residue.
  for (double& v : table) v = std::clamp(v, 0.0, 1.0);
  return Capacity(std::move(ground), std::move(table));
}

bool operator==(const Capacity& a, const Capacity& b) {
  if (!a.ground().CompatibleWith(b.ground())) return false;
  for (std::size_t i = 0; i < a.table_.size(); ++i) {
    if (std::abs(a.table_[i] - b.table_[i]) > kStructuralTol) return false;
  }
  return true;
}

MassFunction MassFunction::Create(GroundSet ground, std::vector<double> mass) {
  if (mass.size() != ground.subset_count()) {
    throw Error(ErrorCode::kBadMass,
                fmt::format("mass vector has {} entries, expected {}", mass.size(),
                            ground.subset_count()));
  }
  if (mass.front() != 0.0) {
    throw Error(ErrorCode::kBadMass, "mass of the empty set must be 0");
  }
  double total = 0.0;
  for (std::size_t a = 0; a < mass.size(); ++a) {
    if (!(mass[a] >= 0.0) || !std::isfinite(mass[a])) {
      throw Error(ErrorCode::kBadMass, fmt::format("mass at {} is {}", ground.Format(a),
                                                   mass[a]));
    }
    total += mass[a];
  }
  if (std::abs(total - 1.0) > kStructuralTol) {
    throw Error(ErrorCode::kBadMass, fmt::format("masses sum to {}, not 1", total));
  }
  return MassFunction(std::move(ground), std::move(mass));
}

Capacity Dual(const Capacity& mu) {
  const GroundSet& ground = mu.ground();
  std::vector<double> table(ground.subset_count());
  for (Subset a = 0; a < table.size(); ++a) table[a] = 1.0 - mu(ground.Complement(a));
  return Capacity::Create(ground, std::move(table));
}

Capacity FromProbability(std::span<const double> weights) {
  return FromProbability(GroundSet(static_cast<int>(weights.size())), weights);
}

Capacity FromProbability(const GroundSet& ground, std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != ground.size()) {
    throw Error(ErrorCode::kBadWeights, fmt::format("{} weights for {} elements",
                                                    weights.size(), ground.size()));
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kBadWeights, fmt::format("weight {} is negative or not finite", w));
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kStructuralTol) {
    throw Error(ErrorCode::kBadWeights, fmt::format("weights sum to {}, not 1", total));
  }
  std::vector<double> table(ground.subset_count(), 0.0);
  for (Subset a = 1; a < table.size(); ++a) {
    // Extend from the set without its lowest element.
    const int low = std::countr_zero(a);
    table[a] = table[a & (a - 1)] + weights[low];
  }
  table.back() = 1.0;
  return Capacity::Create(ground, std::move(table));
}

bool IsAdditive(const Capacity& mu, double tol) {
  // Additivity on disjoint pairs reduces to mu(A) = sum of singletons.
  const Subset count = static_cast<Subset>(mu.ground().subset_count());
  for (Subset a = 1; a < count; ++a) {
    double sum = 0.0;
    for (int i = 0; i < mu.n(); ++i) {
      if (a & (Subset{1} << i)) sum += mu(Subset{1} << i);
    }
    if (std::abs(mu(a) - sum) > tol) return false;
  }
  return true;
}

Capacity Distort(const Capacity& probability, const WeightingFunction& g) {
  return Distort(probability, [&g](double p) { return g(p); });
}

Capacity Distort(const Capacity& probability, const std::function<double(double)>& g) {
  if (!IsAdditive(probability)) {
    throw Error(ErrorCode::kNotAdditive, "distortion requires an additive capacity");
  }
  std::vector<double> table(probability.ground().subset_count());
  for (Subset a = 0; a < table.size(); ++a) {
    table[a] = g(std::clamp(probability(a), 0.0, 1.0));
  }
  return Capacity::Create(probability.ground(), std::move(table));
}

Capacity Hurwicz(std::span<const Capacity> family, double theta) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "Hurwicz family is empty");
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("theta = {} is outside [0, 1]", theta));
  }
  const GroundSet& ground = family.front().ground();
  for (const Capacity& p : family) {
    if (!p.ground().CompatibleWith(ground)) {
      throw Error(ErrorCode::kGroundSetMismatch, "Hurwicz family mixes ground sets");
    }
    if (!IsAdditive(p)) {
      throw Error(ErrorCode::kNotAdditive, "Hurwicz family members must be additive");
    }
  }
  std::vector<double> table(ground.subset_count());
  for (Subset a = 0; a < table.size(); ++a) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Capacity& p : family) {
      lo = std::min(lo, p(a));
      hi = std::max(hi, p(a));
    }
    table[a] = theta * lo + (1.0 - theta) * hi;
  }
  return Capacity::Create(ground, std::move(table));
}

Capacity Possibility(std::span<const double> psi) {
  if (psi.empty()) throw Error(ErrorCode::kBadPsi, "psi is empty");
  RequireUnitInterval(psi, "psi");
  const double top = *std::max_element(psi.begin(), psi.end());
  if (top != 1.0) {
    throw Error(ErrorCode::kBadPsi, fmt::format("max psi = {} but must be 1", top));
  }
  const GroundSet ground(static_cast<int>(psi.size()));
  std::vector<double> table(ground.subset_count());
  for (Subset a = 0; a < table.size(); ++a) table[a] = MaxOver(psi, a);
  return Capacity::Create(ground, std::move(table));
}

Capacity Necessity(std::span<const double> psi) { return Dual(Possibility(psi)); }

Capacity Unanimity(const GroundSet& ground, Subset coalition) {
  if (coalition == 0) throw Error(ErrorCode::kEmptyCoalition, "coalition is empty");
  if ((coalition & ~ground.full()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "coalition is not a subset of the ground set");
  }
  std::vector<double> table(ground.subset_count());
  for (Subset a = 0; a < table.size(); ++a) table[a] = (a & coalition) == coalition ? 1.0 : 0.0;
  return Capacity::Create(ground, std::move(table));
}

Capacity Belief(const MassFunction& m) {
  const GroundSet& ground = m.ground();
  std::vector<double> table(ground.subset_count(), 0.0);
  for (Subset a = 0; a < table.size(); ++a) {
    // Enumerate subsets b of a.
    for (Subset b = a;; b = (b - 1) & a) {
      table[a] += m(b);
      if (b == 0) break;
    }
  }
  return Capacity::Create(ground, std::move(table));
}

Capacity Plausibility(const MassFunction& m) {
  const GroundSet& ground = m.ground();
  std::vector<double> table(ground.subset_count(), 0.0);
  for (Subset a = 0; a < table.size(); ++a) {
    for (Subset b = 1; b < table.size(); ++b) {
      if (a & b) table[a] += m(b);
    }
  }
  return Capacity::Create(ground, std::move(table));
}

Capacity Credibility(std::span<const double> v) {
  if (v.empty()) throw Error(ErrorCode::kInvalidArgument, "v is empty");
  RequireUnitInterval(v, "v");
  const double top = *std::max_element(v.begin(), v.end());
  if (top != 1.0) {
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("credibility needs max v = 1 (got {}), otherwise Cr(ground) < 1",
                            top));
  }
  const GroundSet ground(static_cast<int>(v.size()));
  std::vector<double> table(ground.subset_count());
  for (Subset a = 0; a < table.size(); ++a) {
    table[a] = (MaxOver(v, a) + 1.0 - MaxOver(v, ground.Complement(a))) / 2.0;
  }
  try {
    return Capacity::Create(ground, std::move(table));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotMonotone) throw;
    throw Error(ErrorCode::kMonotonicityFailure, e.what());
  }
}

bool IsZeroOneValued(const Capacity& mu) {
  return std::all_of(mu.table().begin(), mu.table().end(),
                     [](double x) { return x == 0.0 || x == 1.0; });
}

SuperadditivityResult CheckSuperadditive(const Capacity& mu, double tol) {
  SuperadditivityResult result;
  const Subset full = mu.ground().full();
  for (Subset a = 1; a <= full; ++a) {
    // Disjoint b ranges over subsets of the complement; b > a avoids repeats.
    const Subset rest = full & ~a;
    for (Subset b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      const double gap = mu(a) + mu(b) - mu(a | b);
      if (gap > tol && gap > result.gap) {
        result.holds = false;
        result.gap = gap;
        result.witness = SubsetPair{a, b};
      }
    }
  }
  return result;
}

DominanceResult DominatesDual(const Capacity& mu, const Capacity& nu) {
  RequireSameGround(mu, nu);
  DominanceResult result;
  result.worst_gap = -std::numeric_limits<double>::infinity();
  const Subset count = static_cast<Subset>(mu.ground().subset_count());
  for (Subset a = 0; a < count; ++a) {
    const double gap = mu(a) - (1.0 - nu(mu.ground().Complement(a)));
    if (gap > result.worst_gap) {
      result.worst_gap = gap;
      result.worst = a;
    }
  }
  result.holds = result.worst_gap <= kStructuralTol;
  return result;
}

std::optional<Subset> FindCoexistenceSet(const Capacity& mu, const Capacity& nu) {
  RequireSameGround(mu, nu);
  const Subset count = static_cast<Subset>(mu.ground().subset_count());
  for (Subset b = 0; b < count; ++b) {
    if (mu(b) > 0.0 && nu(mu.ground().Complement(b)) > 0.0) return b;
  }
  return std::nullopt;
}

const char* UncertaintyAxiomName(UncertaintyAxiom axiom) {
  switch (axiom) {
    case UncertaintyAxiom::kNormalization: return "M1";
    case UncertaintyAxiom::kSelfDuality: return "M2";
    case UncertaintyAxiom::kSubadditivity: return "M3";
  }
  return "?";
}

UncertaintyCheck CheckUncertaintyMeasure(const Capacity& m) {
  UncertaintyCheck result;
  const GroundSet& ground = m.ground();
  if (m(ground.full()) != 1.0) {
    result.holds = false;
    result.failing = UncertaintyAxiom::kNormalization;
    result.witness = {ground.full(), ground.full()};
    return result;
  }
  const Subset count = static_cast<Subset>(ground.subset_count());
  for (Subset a = 0; a < count; ++a) {
    if (std::abs(m(a) + m(ground.Complement(a)) - 1.0) > kStructuralTol) {
      result.holds = false;
      result.failing = UncertaintyAxiom::kSelfDuality;
      result.witness = {a, ground.Complement(a)};
      return result;
    }
  }
  for (Subset a = 0; a < count; ++a) {
    for (Subset b = a; b < count; ++b) {
      if (m(a | b) > m(a) + m(b) + kStructuralTol) {
        result.holds = false;
        result.failing = UncertaintyAxiom::kSubadditivity;
        result.witness = {a, b};
        return result;
      }
    }
  }
  return result;
}

}  // namespace choquet
