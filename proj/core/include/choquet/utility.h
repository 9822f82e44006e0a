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

// Strictly increasing utility functions with u(0) = 0, their derivatives,
// inverses and Arrow-Pratt coefficients, plus grid-based shape checks.

#ifndef CHOQUET_UTILITY_H_
#define CHOQUET_UTILITY_H_

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace choquet {

// Interval of the real line; each end may be open or closed and infinite
// ends are always open.
struct Domain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  static Domain Real() { return {}; }
  bool Contains(double x) const {
    return (lo_closed ? x >= lo : x > lo) && (hi_closed ? x <= hi : x < hi);
  }
  Domain Intersect(const Domain& other) const;
};

class UtilityFunction {
 public:
  // 1 - exp(-a x), a > 0.
  struct Exponential {
    double a;
  };
  // (x + a)^b - a^b, a >= 0, b > 0.
  struct Power {
    double a;
    double b;
  };
  // ln((x + a) / a), a >= 1.
  struct Logarithmic {
    double a;
  };
  // 1 - exp(-b x^c), b, c > 0.
  struct PowerExpo {
    double b;
    double c;
  };
  struct Linear {};
  // x - sqrt((-x)_+): convex for x < 0, linear for x >= 0.
  struct NegSqrtKink {};
  // x - (-x)_+.
  struct PiecewiseLinearKink {};
  // (exp(a x) - 1) / a, a > 0; convex.
  struct ConvexExponential {
    double a;
  };
  // x + k x^2 on (-1/(2k), inf), k > 0; convex.
  struct Quadratic {
    double k;
  };
  // Piecewise-linear through strictly increasing knots; inverse by bisection.
  struct Table {
    std::vector<std::pair<double, double>> knots;
  };
  using Params = std::variant<Exponential, Power, Logarithmic, PowerExpo, Linear,
                              NegSqrtKink, PiecewiseLinearKink, ConvexExponential,
                              Quadratic, Table>;

  static UtilityFunction MakeExponential(double a);
  static UtilityFunction MakePower(double a, double b);
  static UtilityFunction MakeLogarithmic(double a);
  // Domain is all of R when c is an odd integer and [0, inf) otherwise.
  static UtilityFunction MakePowerExpo(double b, double c);
  static UtilityFunction MakeLinear();
  static UtilityFunction MakeNegSqrtKink();
  static UtilityFunction MakePiecewiseLinearKink();
  static UtilityFunction MakeConvexExponential(double a);
  static UtilityFunction MakeQuadratic(double k);
  // Knots strictly increasing in both coordinates, first x < 0 < last x,
  // interpolated value at 0 equal to 0.
  static UtilityFunction MakeTable(std::vector<std::pair<double, double>> knots);

  // "exp:1.0", "power:4,0.5", "log:1", "powerexpo:1,2", "linear", "negsqrt",
  // "kink", "convexp:1", "quad:0.5", "table:-1/-2,0/0,2/1".
  static UtilityFunction Parse(std::string_view spec);

  // Throws kDomainError outside the domain.
  double operator()(double x) const;
  // Throws kNonDifferentiable at kinks and at a closed boundary where the
  // derivative is infinite.
  double Prime(double x) const;
  double Second(double x) const;
  // Closed form for the parametric families, bisection to 1e-12 for tables.
  // Throws kNotInRange outside u(domain).
  double Inverse(double y) const;

  const Domain& domain() const { return domain_; }
  Domain range() const;
  const Params& params() const { return params_; }
  std::string ToString() const;

 private:
  UtilityFunction(Params params, Domain domain)
      : params_(std::move(params)), domain_(domain) {}
  void RequireInDomain(double x) const;

  Params params_;
  Domain domain_;
};

// r_u(x) = -u''(x) / u'(x). Throws kNonDifferentiable or kZeroDerivative.
double ArrowPratt(const UtilityFunction& u, double x);

// `count` uniform points on domain intersected with [lo, hi], with open
// domain ends nudged inward, plus 0 when it lies in the domain.
std::vector<double> MakeGrid(const Domain& domain, int count = 201, double lo = -10.0,
                             double hi = 10.0);

struct ShapeCheck {
  bool holds = true;
  // Worst violating pair: (x, y) for concavity, (a, b) for weak
  // superadditivity.
  std::optional<std::pair<double, double>> witness;
  double gap = 0.0;
};

// Midpoint concavity f((x+y)/2) >= (f(x)+f(y))/2 over all grid pairs. The
// tolerance is 1e-12 scaled by 1 + |(f(x)+f(y))/2|.
ShapeCheck CheckConcave(const std::function<double(double)>& f,
                        std::span<const double> grid);
ShapeCheck CheckConcave(const UtilityFunction& u, std::span<const double> grid);

// f(a) + f(b) <= f(a + b) for grid pairs a <= 0 <= b with a + b in domain.
ShapeCheck CheckWeaklySuperadditive(const std::function<double(double)>& f,
                                    const Domain& domain, std::span<const double> grid);
ShapeCheck CheckWeaklySuperadditive(const UtilityFunction& u,
                                    std::span<const double> grid);

// g = u o v^{-1} on v(domain u intersect domain v).
class ComposedUtility {
 public:
  ComposedUtility(UtilityFunction u, UtilityFunction v);

  double operator()(double x) const;
  double Prime(double x) const;
  // -u'(z) / v'(z)^2 * (r_u(z) - r_v(z)) with z = v^{-1}(x).
  double Second(double x) const;
  // Image under v of the common domain.
  Domain domain() const;

  const UtilityFunction& outer() const { return u_; }
  const UtilityFunction& inner() const { return v_; }

 private:
  UtilityFunction u_;
  UtilityFunction v_;
};

}  // namespace choquet

#endif  // CHOQUET_UTILITY_H_
