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

#include "choquet/utility.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "choquet/error.h"
#include "choquet/tolerance.h"
#include "parse_util.h"

namespace choquet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBisectionTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool IsOddInteger(double c) {
  return c == std::floor(c) && std::fmod(std::abs(c), 2.0) == 1.0;
}

void RequirePositive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} must be positive and finite, got {}", what, value));
  }
}

[[noreturn]] void ThrowKink(double x) {
  throw Error(ErrorCode::kNonDifferentiable,
              fmt::format("utility is not differentiable at x = {}", x));
}

// Index of the table segment containing x; -1 when x sits on an interior knot.
int TableSegment(const std::vector<std::pair<double, double>>& knots, double x) {
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    if (x == knots[i].first) return -1;
  }
  auto it = std::upper_bound(knots.begin(), knots.end(), x,
                             [](double v, const auto& k) { return v < k.first; });
  if (it == knots.begin()) return 0;
  if (it == knots.end()) return static_cast<int>(knots.size()) - 2;
  return static_cast<int>(it - knots.begin()) - 1;
}

double TableEval(const std::vector<std::pair<double, double>>& knots, double x) {
  auto it = std::upper_bound(knots.begin(), knots.end(), x,
                             [](double v, const auto& k) { return v < k.first; });
  if (it == knots.begin()) return knots.front().second;
  if (it == knots.end()) return knots.back().second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

Domain Domain::Intersect(const Domain& other) const {
  Domain d;
  if (lo > other.lo) {
    d.lo = lo;
    d.lo_closed = lo_closed;
  } else if (other.lo > lo) {
    d.lo = other.lo;
    d.lo_closed = other.lo_closed;
  } else {
    d.lo = lo;
    d.lo_closed = lo_closed && other.lo_closed;
  }
  if (hi < other.hi) {
    d.hi = hi;
    d.hi_closed = hi_closed;
  } else if (other.hi < hi) {
    d.hi = other.hi;
    d.hi_closed = other.hi_closed;
  } else {
    d.hi = hi;
    d.hi_closed = hi_closed && other.hi_closed;
  }
  return d;
}

UtilityFunction UtilityFunction::MakeExponential(double a) {
  RequirePositive(a, "exponential a");
  return UtilityFunction(Exponential{a}, Domain::Real());
}

UtilityFunction UtilityFunction::MakePower(double a, double b) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("power a must be >= 0, got {}", a));
  }
  RequirePositive(b, "power b");
  const Domain domain{-a, kInf, a == 0.0, false};
  return UtilityFunction(Power{a, b}, domain);
}

UtilityFunction UtilityFunction::MakeLogarithmic(double a) {
  if (!(a >= 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("logarithmic a must be >= 1, got {}", a));
  }
  return UtilityFunction(Logarithmic{a}, Domain{-a, kInf, false, false});
}

UtilityFunction UtilityFunction::MakePowerExpo(double b, double c) {
  RequirePositive(b, "power-expo b");
  RequirePositive(c, "power-expo c");
  const Domain domain = IsOddInteger(c) ? Domain::Real() : Domain{0.0, kInf, true, false};
  return UtilityFunction(PowerExpo{b, c}, domain);
}

UtilityFunction UtilityFunction::MakeLinear() {
  return UtilityFunction(Linear{}, Domain::Real());
}

UtilityFunction UtilityFunction::MakeNegSqrtKink() {
  return UtilityFunction(NegSqrtKink{}, Domain::Real());
}

UtilityFunction UtilityFunction::MakePiecewiseLinearKink() {
  return UtilityFunction(PiecewiseLinearKink{}, Domain::Real());
}

UtilityFunction UtilityFunction::MakeConvexExponential(double a) {
  RequirePositive(a, "convex exponential a");
  return UtilityFunction(ConvexExponential{a}, Domain::Real());
}

UtilityFunction UtilityFunction::MakeQuadratic(double k) {
  RequirePositive(k, "quadratic k");
  return UtilityFunction(Quadratic{k}, Domain{-0.5 / k, kInf, false, false});
}

UtilityFunction UtilityFunction::MakeTable(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "utility table needs at least two knots");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first) || !(knots[i].second > knots[i - 1].second)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "utility table knots must be strictly increasing in x and u");
    }
  }
  if (!(knots.front().first < 0.0 && knots.back().first > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "utility table must straddle x = 0");
  }
  if (std::abs(TableEval(knots, 0.0)) > kStructuralTol) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("utility table has u(0) = {}, expected 0", TableEval(knots, 0.0)));
  }
  const Domain domain{knots.front().first, knots.back().first, true, true};
  return UtilityFunction(Table{std::move(knots)}, domain);
}

UtilityFunction UtilityFunction::Parse(std::string_view spec) {
  const auto [kind, rest] = internal::SplitKind(spec);
  if (kind == "linear") return MakeLinear();
  if (kind == "negsqrt") return MakeNegSqrtKink();
  if (kind == "kink") return MakePiecewiseLinearKink();
  if (kind == "table") return MakeTable(internal::ParseKnots(rest));
  const std::vector<double> args = internal::ParseNumberList(rest);
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("utility '{}' expects {} parameter(s)", kind, count));
    }
  };
  if (kind == "exp") {
    expect(1);
    return MakeExponential(args[0]);
  }
  if (kind == "power") {
    expect(2);
    return MakePower(args[0], args[1]);
  }
  if (kind == "log") {
    expect(1);
    return MakeLogarithmic(args[0]);
  }
  if (kind == "powerexpo") {
    expect(2);
    return MakePowerExpo(args[0], args[1]);
  }
  if (kind == "convexp") {
    expect(1);
    return MakeConvexExponential(args[0]);
  }
  if (kind == "quad") {
    expect(1);
    return MakeQuadratic(args[0]);
  }
  throw Error(ErrorCode::kParseError, "unknown utility '" + std::string(spec) + "'");
}

void UtilityFunction::RequireInDomain(double x) const {
  if (!domain_.Contains(x)) {
    throw Error(ErrorCode::kDomainError,
                fmt::format("x = {} is outside the domain of {}", x, ToString()));
  }
}

double UtilityFunction::operator()(double x) const {
  RequireInDomain(x);
  return std::visit(
      Overloaded{
          [x](const Exponential& p) { return -std::expm1(-p.a * x); },
          [x](const Power& p) { return std::pow(x + p.a, p.b) - std::pow(p.a, p.b); },
          [x](const Logarithmic& p) { return std::log1p(x / p.a); },
          [x](const PowerExpo& p) { return -std::expm1(-p.b * std::pow(x, p.c)); },
          [x](const Linear&) { return x; },
          [x](const NegSqrtKink&) { return x < 0.0 ? x - std::sqrt(-x) : x; },
          [x](const PiecewiseLinearKink&) { return x < 0.0 ? 2.0 * x : x; },
          [x](const ConvexExponential& p) { return std::expm1(p.a * x) / p.a; },
          [x](const Quadratic& p) { return x + p.k * x * x; },
          [x](const Table& t) { return TableEval(t.knots, x); },
      },
      params_);
}

double UtilityFunction::Prime(double x) const {
  RequireInDomain(x);
  return std::visit(
      Overloaded{
          [x](const Exponential& p) { return p.a * std::exp(-p.a * x); },
          [x](const Power& p) {
            if (x + p.a == 0.0) ThrowKink(x);
            return p.b * std::pow(x + p.a, p.b - 1.0);
          },
          [x](const Logarithmic& p) { return 1.0 / (x + p.a); },
          [x](const PowerExpo& p) {
            if (x == 0.0) {
              if (p.c < 1.0) ThrowKink(x);
              return p.c == 1.0 ? p.b : 0.0;
            }
            return p.b * p.c * std::pow(x, p.c - 1.0) * std::exp(-p.b * std::pow(x, p.c));
          },
          [](const Linear&) { return 1.0; },
          [x](const NegSqrtKink&) {
            if (x == 0.0) ThrowKink(x);
            return x > 0.0 ? 1.0 : 1.0 + 0.5 / std::sqrt(-x);
          },
          [x](const PiecewiseLinearKink&) {
            if (x == 0.0) ThrowKink(x);
            return x > 0.0 ? 1.0 : 2.0;
          },
          [x](const ConvexExponential& p) { return std::exp(p.a * x); },
          [x](const Quadratic& p) { return 1.0 + 2.0 * p.k * x; },
          [x](const Table& t) {
            const int seg = TableSegment(t.knots, x);
            if (seg < 0) ThrowKink(x);
            const auto& [x0, y0] = t.knots[seg];
            const auto& [x1, y1] = t.knots[seg + 1];
            return (y1 - y0) / (x1 - x0);
          },
      },
      params_);
}

double UtilityFunction::Second(double x) const {
  RequireInDomain(x);
  return std::visit(
      Overloaded{
          [x](const Exponential& p) { return -p.a * p.a * std::exp(-p.a * x); },
          [x](const Power& p) {
            if (x + p.a == 0.0) ThrowKink(x);
            return p.b * (p.b - 1.0) * std::pow(x + p.a, p.b - 2.0);
          },
          [x](const Logarithmic& p) { return -1.0 / ((x + p.a) * (x + p.a)); },
          [x](const PowerExpo& p) {
            if (x == 0.0) {
              if (p.c == 1.0) return -p.b * p.b;
              if (p.c == 2.0) return 2.0 * p.b;
              if (p.c < 2.0) ThrowKink(x);
              return 0.0;
            }
            const double first = p.b * p.c * std::pow(x, p.c - 1.0);
            return std::exp(-p.b * std::pow(x, p.c)) *
                   (p.b * p.c * (p.c - 1.0) * std::pow(x, p.c - 2.0) - first * first);
          },
          [](const Linear&) { return 0.0; },
          [x](const NegSqrtKink&) {
            if (x == 0.0) ThrowKink(x);
            return x > 0.0 ? 0.0 : 0.25 * std::pow(-x, -1.5);
          },
          [x](const PiecewiseLinearKink&) {
            if (x == 0.0) ThrowKink(x);
            return 0.0;
          },
          [x](const ConvexExponential& p) { return p.a * std::exp(p.a * x); },
          [](const Quadratic& p) { return 2.0 * p.k; },
          [x](const Table& t) {
            if (TableSegment(t.knots, x) < 0) ThrowKink(x);
            return 0.0;
          },
      },
      params_);
}

Domain UtilityFunction::range() const {
  return std::visit(
      Overloaded{
          [](const Exponential&) { return Domain{-kInf, 1.0, false, false}; },
          [](const Power& p) {
            return Domain{-std::pow(p.a, p.b), kInf, p.a == 0.0, false};
          },
          [](const Logarithmic&) { return Domain::Real(); },
          [this](const PowerExpo&) {
            return domain_.lo_closed ? Domain{0.0, 1.0, true, false}
                                     : Domain{-kInf, 1.0, false, false};
          },
          [](const Linear&) { return Domain::Real(); },
          [](const NegSqrtKink&) { return Domain::Real(); },
          [](const PiecewiseLinearKink&) { return Domain::Real(); },
          [](const ConvexExponential& p) { return Domain{-1.0 / p.a, kInf, false, false}; },
          [](const Quadratic& p) { return Domain{-0.25 / p.k, kInf, false, false}; },
          [](const Table& t) {
            return Domain{t.knots.front().second, t.knots.back().second, true, true};
          },
      },
      params_);
}

double UtilityFunction::Inverse(double y) const {
  if (!range().Contains(y)) {
    throw Error(ErrorCode::kNotInRange,
                fmt::format("y = {} is outside the range of {}", y, ToString()));
  }
  return std::visit(
      Overloaded{
          [y](const Exponential& p) { return -std::log1p(-y) / p.a; },
          [y](const Power& p) {
            return std::pow(y + std::pow(p.a, p.b), 1.0 / p.b) - p.a;
          },
          [y](const Logarithmic& p) { return p.a * std::expm1(y); },
          [y](const PowerExpo& p) {
            const double power = -std::log1p(-y) / p.b;  // x^c
            const double root = std::pow(std::abs(power), 1.0 / p.c);
            return power < 0.0 ? -root : root;
          },
          [y](const Linear&) { return y; },
          [y](const NegSqrtKink&) {
            if (y >= 0.0) return y;
            const double s = 2.0 * (-y) / (1.0 + std::sqrt(1.0 - 4.0 * y));  // sqrt(-x)
            return -s * s;
          },
          [y](const PiecewiseLinearKink&) { return y >= 0.0 ? y : 0.5 * y; },
          [y](const ConvexExponential& p) { return std::log1p(p.a * y) / p.a; },
          [y](const Quadratic& p) {
            return 2.0 * y / (1.0 + std::sqrt(1.0 + 4.0 * p.k * y));
          },
          [this, y](const Table&) {
            double lo = domain_.lo;
            double hi = domain_.hi;
            for (int iter = 0; iter < 200 && hi - lo > kBisectionTol; ++iter) {
              const double mid = 0.5 * (lo + hi);
              if ((*this)(mid) < y) {
                lo = mid;
              } else {
                hi = mid;
              }
            }
            return 0.5 * (lo + hi);
          },
      },
      params_);
}

std::string UtilityFunction::ToString() const {
  return std::visit(
      Overloaded{
          [](const Exponential& p) { return fmt::format("exp:{}", p.a); },
          [](const Power& p) { return fmt::format("power:{},{}", p.a, p.b); },
          [](const Logarithmic& p) { return fmt::format("log:{}", p.a); },
          [](const PowerExpo& p) { return fmt::format("powerexpo:{},{}", p.b, p.c); },
          [](const Linear&) { return std::string("linear"); },
          [](const NegSqrtKink&) { return std::string("negsqrt"); },
          [](const PiecewiseLinearKink&) { return std::string("kink"); },
          [](const ConvexExponential& p) { return fmt::format("convexp:{}", p.a); },
          [](const Quadratic& p) { return fmt::format("quad:{}", p.k); },
          [](const Table& t) {
            std::string s = "table:";
            for (std::size_t i = 0; i < t.knots.size(); ++i) {
              if (i > 0) s += ',';
              s += fmt::format("{}/{}", t.knots[i].first, t.knots[i].second);
            }
            return s;
          },
      },
      params_);
}

double ArrowPratt(const UtilityFunction& u, double x) {
  const double first = u.Prime(x);
  if (!(first > 0.0)) {
    throw Error(ErrorCode::kZeroDerivative, fmt::format("u'({}) = {}", x, first));
  }
  return -u.Second(x) / first;
}

std::vector<double> MakeGrid(const Domain& domain, int count, double lo, double hi) {
  if (count < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 points");
  double start = std::max(domain.lo, lo);
  double stop = std::min(domain.hi, hi);
  if (!(start < stop)) {
    throw Error(ErrorCode::kInvalidArgument, "grid range does not meet the domain");
  }
  const double nudge = 1e-6 * (stop - start);
  if (!domain.Contains(start)) start += nudge;
  if (!domain.Contains(stop)) stop -= nudge;
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) {
    grid[k] = start + (stop - start) * static_cast<double>(k) / (count - 1);
  }
  grid.back() = stop;
  if (domain.Contains(0.0) && start <= 0.0 && stop >= 0.0) grid.push_back(0.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ShapeCheck CheckConcave(const std::function<double(double)>& f,
                        std::span<const double> grid) {
  ShapeCheck result;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = f(grid[i]);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double chord = 0.5 * (values[i] + values[j]);
      const double gap = chord - f(0.5 * (grid[i] + grid[j]));
      if (gap > kStructuralTol * (1.0 + std::abs(chord)) && gap > result.gap) {
        result.holds = false;
        result.gap = gap;
        result.witness = std::make_pair(grid[i], grid[j]);
      }
    }
  }
  return result;
}

ShapeCheck CheckConcave(const UtilityFunction& u, std::span<const double> grid) {
  return CheckConcave([&u](double x) { return u(x); }, grid);
}

ShapeCheck CheckWeaklySuperadditive(const std::function<double(double)>& f,
                                    const Domain& domain, std::span<const double> grid) {
  ShapeCheck result;
  for (double a : grid) {
    if (a > 0.0) continue;
    for (double b : grid) {
      if (b < 0.0 || !domain.Contains(a + b)) continue;
      const double lhs = f(a) + f(b);
      const double rhs = f(a + b);
      const double gap = lhs - rhs;
      if (gap > kStructuralTol * (1.0 + std::abs(rhs)) && gap > result.gap) {
        result.holds = false;
        result.gap = gap;
        result.witness = std::make_pair(a, b);
      }
    }
  }
  return result;
}

ShapeCheck CheckWeaklySuperadditive(const UtilityFunction& u,
                                    std::span<const double> grid) {
  return CheckWeaklySuperadditive([&u](double x) { return u(x); }, u.domain(), grid);
}

ComposedUtility::ComposedUtility(UtilityFunction u, UtilityFunction v)
    : u_(std::move(u)), v_(std::move(v)) {}

double ComposedUtility::operator()(double x) const { return u_(v_.Inverse(x)); }

double ComposedUtility::Prime(double x) const {
  const double z = v_.Inverse(x);
  return u_.Prime(z) / v_.Prime(z);
}

double ComposedUtility::Second(double x) const {
  const double z = v_.Inverse(x);
  const double vp = v_.Prime(z);
  return -u_.Prime(z) / (vp * vp) * (ArrowPratt(u_, z) - ArrowPratt(v_, z));
}

Domain ComposedUtility::domain() const {
  const Domain common = u_.domain().Intersect(v_.domain());
  const Domain image = v_.range();
  Domain d;
  d.lo = v_.domain().Contains(common.lo) ? v_(common.lo) : image.lo;
  d.lo_closed = common.lo_closed;
  d.hi = v_.domain().Contains(common.hi) ? v_(common.hi) : image.hi;
  d.hi_closed = common.hi_closed;
  return d;
}

}  // namespace choquet
