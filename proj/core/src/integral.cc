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

#include "choquet/integral.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "choquet/error.h"

namespace choquet {
namespace {

void RequireMatch(const Capacity& c, const RandomVariable& x) {
  if (c.n() != x.size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("capacity has {} elements but X has {} values", c.n(), x.size()));
  }
}

void RequireMatch(const Capacity& mu, const Capacity& nu, const RandomVariable& x) {
  if (!mu.ground().CompatibleWith(nu.ground())) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("capacities have {} and {} elements", mu.n(), nu.n()));
  }
  RequireMatch(mu, x);
}

std::vector<double> SortedDistinct(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo < 0.0 && 0.0 < hi)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("interval ({}, {}) must contain 0", lo, hi));
  }
}

RandomVariable::RandomVariable(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || static_cast<int>(values_.size()) > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("random variable needs 1..{} values, got {}", kMaxGroundSize,
                            values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "random variable values must be finite");
    }
  }
}

RandomVariable RandomVariable::Constant(int n, double c) {
  return RandomVariable(std::vector<double>(n, c));
}

RandomVariable RandomVariable::TwoPoint(int n, Subset set, double b, double a) {
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = (set & (Subset{1} << i)) ? b : a;
  return RandomVariable(std::move(values));
}

double RandomVariable::min() const { return *std::min_element(values_.begin(), values_.end()); }
double RandomVariable::max() const { return *std::max_element(values_.begin(), values_.end()); }

RandomVariable RandomVariable::Map(const std::function<double(double)>& f) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), f);
  return RandomVariable(std::move(out));
}

RandomVariable RandomVariable::Scaled(double b) const {
  return Map([b](double v) { return b * v; });
}

RandomVariable RandomVariable::Shifted(double a) const {
  return Map([a](double v) { return a + v; });
}

RandomVariable RandomVariable::SubtractedFrom(double a) const {
  return Map([a](double v) { return a - v; });
}

Subset UpperEvent(const RandomVariable& x, double t, Tail tail) {
  Subset event = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (tail == Tail::kStrict ? x[i] > t : x[i] >= t) event |= Subset{1} << i;
  }
  return event;
}

Subset LowerEvent(const RandomVariable& x, double t, Tail tail) {
  Subset event = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (tail == Tail::kStrict ? x[i] < t : x[i] <= t) event |= Subset{1} << i;
  }
  return event;
}

double Survival(const Capacity& mu, const RandomVariable& x, double t, Tail tail) {
  RequireMatch(mu, x);
  return mu(UpperEvent(x, t, tail));
}

double LowerTail(const Capacity& nu, const RandomVariable& x, double t, Tail tail) {
  RequireMatch(nu, x);
  return nu(LowerEvent(x, t, tail));
}

double GenChoquet(const Capacity& mu, const Capacity& nu, const RandomVariable& x) {
  RequireMatch(mu, nu, x);
  const std::vector<double> levels = SortedDistinct(x.values());

  // On [v_{j-1}, v_j) the event {X > t} is {X >= v_j}.
  double gains = 0.0;
  double previous = 0.0;
  for (double v : levels) {
    if (v <= 0.0) continue;
    gains += (v - previous) * mu(UpperEvent(x, v, Tail::kNonStrict));
    previous = v;
  }

  // On (u_j, u_{j-1}] the event {X < t} is {X <= u_j}.
  double losses = 0.0;
  previous = 0.0;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const double u = *it;
    if (u >= 0.0) continue;
    losses += (previous - u) * nu(LowerEvent(x, u, Tail::kNonStrict));
    previous = u;
  }
  return gains - losses;
}

double Choquet(const Capacity& mu, const RandomVariable& x) {
  return GenChoquet(mu, Dual(mu), x);
}

double Sipos(const Capacity& mu, const RandomVariable& x) { return GenChoquet(mu, mu, x); }

double IntegrateStep(const std::function<double(double)>& integrand,
                     std::span<const double> breakpoints, double from, double to) {
  if (from == to) return 0.0;
  const double sign = from < to ? 1.0 : -1.0;
  const double lo = std::min(from, to);
  const double hi = std::max(from, to);
  std::vector<double> cuts = {lo, hi};
  for (double b : breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    total += (cuts[k] - cuts[k - 1]) * integrand(0.5 * (cuts[k] + cuts[k - 1]));
  }
  return sign * total;
}

double GenChoquetNonStrict(const Capacity& mu, const Capacity& nu, const RandomVariable& x) {
  RequireMatch(mu, nu, x);
  const double gains = IntegrateStep(
      [&](double t) { return mu(UpperEvent(x, t, Tail::kNonStrict)); }, x.values(), 0.0,
      std::max(x.max(), 0.0));
  const double losses = IntegrateStep(
      [&](double t) { return nu(LowerEvent(x, t, Tail::kNonStrict)); }, x.values(),
      std::min(x.min(), 0.0), 0.0);
  return gains - losses;
}

double RiemannOracle(const Capacity& mu, const Capacity& nu, const RandomVariable& x,
                     double step) {
  RequireMatch(mu, nu, x);
  if (!(step > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "oracle step must be positive");
  }
  const std::span<const double> values = x.values();
  auto mask_above = [&](double t) {
    Subset m = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > t) m |= Subset{1} << i;
    }
    return m;
  };
  auto mask_below = [&](double t) {
    Subset m = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < t) m |= Subset{1} << i;
    }
    return m;
  };

  double gains = 0.0;
  const double top = std::max(*std::max_element(values.begin(), values.end()), 0.0);
  for (long k = 0;; ++k) {
    const double left = static_cast<double>(k) * step;
    if (left >= top) break;
    const double right = std::min(left + step, top);
    gains += (right - left) * mu(mask_above(0.5 * (left + right)));
  }
  double losses = 0.0;
  const double bottom = std::min(*std::min_element(values.begin(), values.end()), 0.0);
  for (long k = 0;; ++k) {
    const double right = -static_cast<double>(k) * step;
    if (right <= bottom) break;
    const double left = std::max(right - step, bottom);
    losses += (right - left) * nu(mask_below(0.5 * (left + right)));
  }
  return gains - losses;
}

double Scale(const Capacity& mu, const Capacity& nu, const RandomVariable& x, double b) {
  return GenChoquet(mu, nu, x.Scaled(b));
}

double TranslationCorrection(const Capacity& mu, const Capacity& nu,
                             const RandomVariable& x, double a) {
  RequireMatch(mu, nu, x);
  return IntegrateStep(
      [&](double s) {
        const double upper = mu(UpperEvent(x, s, Tail::kStrict));
        // conj(nu)(X >= s) = 1 - nu(X < s).
        const double dual_upper = 1.0 - nu(LowerEvent(x, s, Tail::kStrict));
        return upper - dual_upper;
      },
      x.values(), -a, 0.0);
}

TranslationGap ComputeTranslationGap(const Capacity& mu, const Capacity& nu,
                                     const RandomVariable& x, double a) {
  TranslationGap gap;
  gap.lhs = GenChoquet(mu, nu, x.Shifted(a)) - a - GenChoquet(mu, nu, x);
  gap.correction = TranslationCorrection(mu, nu, x, a);
  return gap;
}

ZeroOneSplit ComputeZeroOneSplit(const Capacity& mu, const Capacity& nu,
                                 const RandomVariable& x) {
  RequireMatch(mu, nu, x);
  if (!IsZeroOneValued(mu) || !IsZeroOneValued(nu)) {
    throw Error(ErrorCode::kNotZeroOneValued, "both capacities must be {0,1}-valued");
  }
  const std::vector<double> levels = SortedDistinct(x.values());
  ZeroOneSplit split;

  // mu(X > t) is nonincreasing and right-continuous in t, so the infimum is
  // attained at 0 or at a positive value of X.
  std::vector<double> upper = {0.0};
  for (double v : levels) {
    if (v > 0.0) upper.push_back(v);
  }
  for (double t : upper) {
    if (mu(UpperEvent(x, t, Tail::kStrict)) == 0.0) {
      split.b = t;
      break;
    }
  }

  std::vector<double> lower = {0.0};
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (*it < 0.0) lower.push_back(*it);
  }
  for (double t : lower) {
    if (nu(LowerEvent(x, t, Tail::kStrict)) == 0.0) {
      split.a = t;
      break;
    }
  }
  return split;
}

bool InL(const Capacity& mu, const Capacity& nu, const RandomVariable& x,
         const Interval& interval) {
  for (double v : x.values()) {
    if (!interval.Contains(v)) return false;
  }
  return interval.Contains(GenChoquet(mu, nu, x));
}

}  // namespace choquet
