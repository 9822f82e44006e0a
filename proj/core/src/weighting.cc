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
#include "choquet/weighting.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <type_traits>

#include <fmt/format.h>

#include "choquet/error.h"
#include "choquet/tolerance.h"
#include "parse_util.h"

namespace choquet {
namespace {

constexpr double kKtGammaFloor = 0.28;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double EvalKt(double gamma, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double a = std::pow(p, gamma);
  const double b = std::pow(1.0 - p, gamma);
  return a / std::pow(a + b, 1.0 / gamma);
}

double EvalGe(double delta, double gamma, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double a = delta * std::pow(p, gamma);
  return a / (a + std::pow(1.0 - p, gamma));
}

double EvalPrelec(double delta, double gamma, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return std::exp(-delta * std::pow(-std::log(p), gamma));
}

double EvalTable(const std::vector<std::pair<double, double>>& knots, double p) {
  auto it = std::upper_bound(knots.begin(), knots.end(), p,
                             [](double x, const auto& k) { return x < k.first; });
  if (it == knots.begin()) return knots.front().second;
  if (it == knots.end()) return knots.back().second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (p - x0) / (x1 - x0);
}

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{} must be a positive finite number, got {}", name, value));
  }
}

}  // namespace

WeightingFunction WeightingFunction::MakeIdentity() {
  return WeightingFunction(Identity{}, false);
}

WeightingFunction WeightingFunction::MakeKahnemanTversky(double gamma,
                                                         bool allow_out_of_range) {
  RequirePositive(gamma, "KT gamma");
  const bool in_range = gamma > kKtGammaFloor && gamma <= 1.0;
  if (!in_range && !allow_out_of_range) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("KT gamma must lie in (0.28, 1], got {}", gamma));
  }
  WeightingFunction g(KahnemanTversky{gamma}, !in_range);
  g.Validate();
  return g;
}

WeightingFunction WeightingFunction::MakeGoldsteinEinhorn(double delta, double gamma) {
  RequirePositive(delta, "GE delta");
  RequirePositive(gamma, "GE gamma");
  return WeightingFunction(GoldsteinEinhorn{delta, gamma}, false);
}

WeightingFunction WeightingFunction::MakePrelec(double delta, double gamma) {
  RequirePositive(delta, "Prelec delta");
  RequirePositive(gamma, "Prelec gamma");
  if (gamma > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("Prelec gamma must satisfy 0 < gamma <= 1, got {}", gamma));
  }
  return WeightingFunction(Prelec{delta, gamma}, false);
}

WeightingFunction WeightingFunction::MakeTable(
    std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "table needs at least two knots");
  }
  if (knots.front().first != 0.0 || knots.back().first != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "table knots must start at p=0 and end at p=1");
  }
  if (std::abs(knots.front().second) > kStructuralTol ||
      std::abs(knots.back().second - 1.0) > kStructuralTol) {
    throw Error(ErrorCode::kInvalidArgument, "table must map 0 to 0 and 1 to 1");
  }
  knots.front().second = 0.0;
  knots.back().second = 1.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw Error(ErrorCode::kInvalidArgument, "table knots must have increasing p");
    }
    if (knots[i].second < knots[i - 1].second) {
      throw Error(ErrorCode::kInvalidArgument,
                  fmt::format("table is decreasing between p={} and p={}",
                              knots[i - 1].first, knots[i].first));
    }
  }
  return WeightingFunction(Table{std::move(knots)}, false);
}

WeightingFunction WeightingFunction::Parse(std::string_view spec,
                                           bool allow_out_of_range) {
  const auto [kind, rest] = internal::SplitKind(spec);
  if (kind == "identity" || kind == "id") return MakeIdentity();
  if (kind == "table") return MakeTable(internal::ParseKnots(rest));
  const std::vector<double> args = internal::ParseNumberList(rest);
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorCode::kParseError,
                  fmt::format("'{}' expects {} parameter(s)", kind, count));
    }
  };
  if (kind == "kt") {
    expect(1);
    return MakeKahnemanTversky(args[0], allow_out_of_range);
  }
  if (kind == "ge") {
    expect(2);
    return MakeGoldsteinEinhorn(args[0], args[1]);
  }
  if (kind == "prelec") {
    expect(2);
    return MakePrelec(args[0], args[1]);
  }
  throw Error(ErrorCode::kParseError,
              "unknown weighting function '" + std::string(spec) + "'");
}

double WeightingFunction::operator()(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("p = {} is outside [0, 1]", p));
  }
  return std::visit(
      Overloaded{
          [p](const Identity&) { return p; },
          [p](const KahnemanTversky& kt) { return EvalKt(kt.gamma, p); },
          [p](const GoldsteinEinhorn& ge) { return EvalGe(ge.delta, ge.gamma, p); },
          [p](const Prelec& pr) { return EvalPrelec(pr.delta, pr.gamma, p); },
          [p](const Table& t) { return EvalTable(t.knots, p); },
      },
      params_);
}

double WeightingFunction::Dual(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kDomainError, fmt::format("p = {} is outside [0, 1]", p));
  }
  return 1.0 - (*this)(1.0 - p);
}

std::string WeightingFunction::ToString() const {
  return std::visit(
      Overloaded{
          [](const Identity&) { return std::string("identity"); },
          [](const KahnemanTversky& kt) { return fmt::format("kt:{}", kt.gamma); },
          [](const GoldsteinEinhorn& ge) {
            return fmt::format("ge:{},{}", ge.delta, ge.gamma);
          },
          [](const Prelec& pr) { return fmt::format("prelec:{},{}", pr.delta, pr.gamma); },
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

void WeightingFunction::Validate() const {
  double previous = 0.0;
  for (int k = 0; k < kDefaultWeightingGrid; ++k) {
    const double p = static_cast<double>(k) / (kDefaultWeightingGrid - 1);
    const double value = (*this)(p);
    if (value < previous - kStructuralTol) {
      throw Error(ErrorCode::kDomainError,
                  fmt::format("{} is decreasing near p = {}", ToString(), p));
    }
    previous = value;
  }
}

WeightingDominance CheckWeightingDominance(const WeightingFunction& g,
                                           const WeightingFunction& h, int grid_size) {
  if (grid_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid_size must be at least 2");
  }
  WeightingDominance result;
  result.max_gap = -1.0;
  for (int k = 0; k < grid_size; ++k) {
    const double p = static_cast<double>(k) / (grid_size - 1);
    const double gap = g(p) - h.Dual(p);
    if (gap > result.max_gap) {
      result.max_gap = gap;
      result.argmax = p;
    }
    if (gap > kStructuralTol) ++result.violations;
  }
  result.holds = result.violations == 0;
  return result;
}

std::vector<FigureRow> FigureData(const WeightingFunction& g, const WeightingFunction& h,
                                  int grid_size) {
  if (grid_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid_size must be at least 2");
  }
  std::vector<FigureRow> rows;
  rows.reserve(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    const double p = static_cast<double>(k) / (grid_size - 1);
    rows.push_back({p, g(p), h.Dual(p)});
  }
  return rows;
}

void WriteFigureCsv(std::ostream& out, std::span<const FigureRow> rows) {
  out << "p,g,h_bar\n";
  for (const FigureRow& row : rows) {
    out << fmt::format("{:.17g},{:.17g},{:.17g}\n", row.p, row.g, row.h_bar);
  }
}

}  // namespace choquet
