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

// The generalized Choquet integral
//
//   C_{mu,nu}(X) = int_0^inf mu(X > t) dt - int_{-inf}^0 nu(X < t) dt
//
// on a finite ground set. Both tails are step functions, so the integral is
// a finite sum over the sorted distinct values of X and both improper
// integrals are always finite.

#ifndef CHOQUET_INTEGRAL_H_
#define CHOQUET_INTEGRAL_H_

#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "choquet/capacity.h"

namespace choquet {

// Open interval (lo, hi) with lo < 0 < hi; either end may be infinite.
class Interval {
 public:
  Interval(double lo, double hi);
  static Interval Real() {
    return Interval(-std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity());
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool Contains(double x) const { return x > lo_ && x < hi_; }

 private:
  double lo_;
  double hi_;
};

// One finite real value per ground-set element.
class RandomVariable {
 public:
  explicit RandomVariable(std::vector<double> values);
  RandomVariable(std::initializer_list<double> values)
      : RandomVariable(std::vector<double>(values)) {}
  static RandomVariable Constant(int n, double c);
  // b on the elements of the set, a elsewhere.
  static RandomVariable TwoPoint(int n, Subset set, double b, double a);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  double min() const;
  double max() const;

  RandomVariable Map(const std::function<double(double)>& f) const;
  RandomVariable Scaled(double b) const;
  RandomVariable Shifted(double a) const;
  // Pointwise a - X.
  RandomVariable SubtractedFrom(double a) const;

  friend bool operator==(const RandomVariable&, const RandomVariable&) = default;

 private:
  std::vector<double> values_;
};

enum class Tail { kStrict, kNonStrict };

// {i : X_i > t} (strict) or {i : X_i >= t}.
Subset UpperEvent(const RandomVariable& x, double t, Tail tail = Tail::kStrict);
// {i : X_i < t} (strict) or {i : X_i <= t}.
Subset LowerEvent(const RandomVariable& x, double t, Tail tail = Tail::kStrict);

// mu(X > t) or mu(X >= t). Throws kGroundSetMismatch.
double Survival(const Capacity& mu, const RandomVariable& x, double t,
                Tail tail = Tail::kStrict);
// nu(X < t) or nu(X <= t).
double LowerTail(const Capacity& nu, const RandomVariable& x, double t,
                 Tail tail = Tail::kStrict);

// Exact evaluation over the sorted distinct values of X.
double GenChoquet(const Capacity& mu, const Capacity& nu, const RandomVariable& x);
// C_{mu, conj(mu)}.
double Choquet(const Capacity& mu, const RandomVariable& x);
// Symmetric (Sipos) integral C_{mu, mu}.
double Sipos(const Capacity& mu, const RandomVariable& x);

// The same integral through the non-strict tails mu(X >= t) and nu(X <= t),
// evaluated piecewise by IntegrateStep.
double GenChoquetNonStrict(const Capacity& mu, const Capacity& nu,
                           const RandomVariable& x);

// Exact integral over the oriented range [from, to] of a function that is
// constant between consecutive breakpoints and may jump at them. Each piece
// is sampled at its midpoint. from > to gives minus the integral over
// [to, from].
double IntegrateStep(const std::function<double(double)>& integrand,
                     std::span<const double> breakpoints, double from, double to);

// Midpoint rule with cells of the given width on [min(X,0), 0] and
// [0, max(X,0)]; the last cell of each range is truncated. Brute force and
// independent of GenChoquet.
double RiemannOracle(const Capacity& mu, const Capacity& nu, const RandomVariable& x,
                     double step);

// C_{mu,nu}(bX).
double Scale(const Capacity& mu, const Capacity& nu, const RandomVariable& x, double b);

struct TranslationGap {
  // C(a + X) - a - C(X).
  double lhs = 0.0;
  // int_{-a}^0 (mu(X > s) - conj(nu)(X >= s)) ds, exact.
  double correction = 0.0;
};
TranslationGap ComputeTranslationGap(const Capacity& mu, const Capacity& nu,
                                     const RandomVariable& x, double a);

// int_{-a}^0 (mu(X > s) - conj(nu)(X >= s)) ds.
double TranslationCorrection(const Capacity& mu, const Capacity& nu,
                             const RandomVariable& x, double a);

struct ZeroOneSplit {
  // sup{t <= 0 : nu(X < t) = 0}
  double a = 0.0;
  // inf{t >= 0 : mu(X > t) = 0}
  double b = 0.0;
};
// Throws kNotZeroOneValued unless both capacities are {0,1}-valued.
ZeroOneSplit ComputeZeroOneSplit(const Capacity& mu, const Capacity& nu,
                                 const RandomVariable& x);

// All values of X and C_{mu,nu}(X) lie in the open interval.
bool InL(const Capacity& mu, const Capacity& nu, const RandomVariable& x,
         const Interval& interval);

}  // namespace choquet

#endif  // CHOQUET_INTEGRAL_H_
