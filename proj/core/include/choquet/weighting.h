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
// Probability weighting (distortion) functions g: [0,1] -> [0,1].

#ifndef CHOQUET_WEIGHTING_H_
#define CHOQUET_WEIGHTING_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace choquet {

inline constexpr int kDefaultWeightingGrid = 1001;

class WeightingFunction {
 public:
  struct Identity {};
  struct KahnemanTversky {
    double gamma;
  };
  struct GoldsteinEinhorn {
    double delta;
    double gamma;
  };
  struct Prelec {
    double delta;
    double gamma;
  };
  struct Table {
    // Knots (p, g(p)) with p strictly increasing from 0 to 1.
    std::vector<std::pair<double, double>> knots;
  };
  using Params =
      std::variant<Identity, KahnemanTversky, GoldsteinEinhorn, Prelec, Table>;

  static WeightingFunction MakeIdentity();
  // gamma in (0.28, 1]; allow_out_of_range admits any gamma > 0 that still
  // gives a nondecreasing function on the validation grid.
  static WeightingFunction MakeKahnemanTversky(double gamma,
                                               bool allow_out_of_range = false);
  static WeightingFunction MakeGoldsteinEinhorn(double delta, double gamma);
  // delta > 0, 0 < gamma <= 1.
  static WeightingFunction MakePrelec(double delta, double gamma);
  static WeightingFunction MakeTable(std::vector<std::pair<double, double>> knots);

  // "identity", "kt:0.61", "ge:0.65,0.60", "prelec:1,0.74",
  // "table:0/0,0.5/0.3,1/1".
  static WeightingFunction Parse(std::string_view spec,
                                 bool allow_out_of_range = false);

  // Throws kDomainError for p outside [0, 1].
  double operator()(double p) const;
  // 1 - g(1 - p).
  double Dual(double p) const;

  const Params& params() const { return params_; }
  // True when a KT parameter outside (0.28, 1] was admitted by override.
  bool out_of_range() const { return out_of_range_; }
  std::string ToString() const;

 private:
  WeightingFunction(Params params, bool out_of_range)
      : params_(std::move(params)), out_of_range_(out_of_range) {}
  void Validate() const;

  Params params_;
  bool out_of_range_ = false;
};

struct WeightingDominance {
  bool holds = true;
  // max over the grid of g(p) - conj(h)(p).
  double max_gap = 0.0;
  double argmax = 0.0;
  // Grid points where the gap exceeds the tolerance.
  int violations = 0;
};

// g <= conj(h) on a uniform grid of grid_size points, tolerance 1e-12.
WeightingDominance CheckWeightingDominance(const WeightingFunction& g,
                                           const WeightingFunction& h,
                                           int grid_size = kDefaultWeightingGrid);

struct FigureRow {
  double p;
  double g;
  double h_bar;
};

std::vector<FigureRow> FigureData(const WeightingFunction& g,
                                  const WeightingFunction& h,
                                  int grid_size = kDefaultWeightingGrid);

// Header "p,g,h_bar", one row per line, 17 significant digits.
void WriteFigureCsv(std::ostream& out, std::span<const FigureRow> rows);

}  // namespace choquet

#endif  // CHOQUET_WEIGHTING_H_
