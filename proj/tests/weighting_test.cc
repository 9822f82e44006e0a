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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "choquet/error.h"
#include "test_util.h"

namespace choquet {
namespace {

const double kInvE = std::exp(-1.0);

WeightingFunction Kt(double gamma) { return WeightingFunction::MakeKahnemanTversky(gamma); }

TEST(WeightingEvalTest, ReferenceValues) {
  // Reference values from 40-digit evaluations of the closed forms.
  EXPECT_NEAR(Kt(0.61)(0.5), 0.42063935433575615, 1e-15);
  EXPECT_NEAR(WeightingFunction::MakeGoldsteinEinhorn(0.65, 0.60)(0.3),
              0.28106972004967898, 1e-15);
  EXPECT_NEAR(WeightingFunction::MakePrelec(1.0, 0.74)(0.5), 0.46652247880932935, 1e-15);
}

TEST(WeightingEvalTest, PrelecFixedPoint) {
  for (double gamma : {0.3, 0.74, 1.0}) {
    EXPECT_NEAR(WeightingFunction::MakePrelec(1.0, gamma)(kInvE), kInvE, 1e-15);
  }
}

TEST(WeightingEvalTest, IdentityAndDual) {
  const WeightingFunction id = WeightingFunction::MakeIdentity();
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    EXPECT_EQ(id(p), p);
    EXPECT_NEAR(id.Dual(p), p, 1e-16);
  }
  const WeightingFunction pr = WeightingFunction::MakePrelec(1.0, 0.74);
  EXPECT_NEAR(pr.Dual(1.0 - kInvE), 1.0 - kInvE, 1e-15);
  EXPECT_EQ(Kt(0.69).Dual(0.0), 0.0);
  EXPECT_EQ(Kt(0.69).Dual(1.0), 1.0);
}

TEST(WeightingEvalTest, RejectsOutsideUnitInterval) {
  EXPECT_THROWS_CODE(Kt(0.61)(-0.1), ErrorCode::kDomainError);
  EXPECT_THROWS_CODE(Kt(0.61).Dual(1.5), ErrorCode::kDomainError);
}

TEST(WeightingEvalTest, ParameterValidation) {
  EXPECT_THROWS_CODE(Kt(0.2), ErrorCode::kInvalidArgument);
  EXPECT_THROWS_CODE(Kt(1.2), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(WeightingFunction::MakeKahnemanTversky(1.2, true).out_of_range());
  EXPECT_THROWS_CODE(WeightingFunction::MakePrelec(1.0, 1.5), ErrorCode::kInvalidArgument);
  EXPECT_THROWS_CODE(WeightingFunction::MakeGoldsteinEinhorn(-1.0, 0.5),
                     ErrorCode::kInvalidArgument);
  EXPECT_THROWS_CODE(WeightingFunction::MakeTable({{0.0, 0.0}, {0.5, 0.6}, {1.0, 0.9}}),
                     ErrorCode::kInvalidArgument);
}

TEST(WeightingEvalTest, ParseRoundTrip) {
  for (const char* spec : {"identity", "kt:0.61", "ge:0.65,0.6", "prelec:1,0.74",
                           "table:0/0,0.5/0.3,1/1"}) {
    const WeightingFunction g = WeightingFunction::Parse(spec);
    EXPECT_EQ(g.ToString(), spec);
    EXPECT_EQ(WeightingFunction::Parse(g.ToString())(0.37), g(0.37));
  }
  EXPECT_THROWS_CODE(WeightingFunction::Parse("kt"), ErrorCode::kParseError);
  EXPECT_THROWS_CODE(WeightingFunction::Parse("nope:1"), ErrorCode::kParseError);
}

TEST(WeightingEvalTest, FamiliesAreNormalizedAndMonotone) {
  const std::vector<WeightingFunction> family = {
      WeightingFunction::MakeIdentity(),
      Kt(0.3),
      Kt(0.61),
      Kt(1.0),
      WeightingFunction::MakeGoldsteinEinhorn(0.65, 0.6),
      WeightingFunction::MakeGoldsteinEinhorn(2.0, 1.5),
      WeightingFunction::MakePrelec(1.0, 0.74),
      WeightingFunction::MakePrelec(0.5, 0.2),
      WeightingFunction::MakeTable({{0.0, 0.0}, {0.3, 0.5}, {1.0, 1.0}})};
  for (const WeightingFunction& g : family) {
    EXPECT_EQ(g(0.0), 0.0) << g.ToString();
    EXPECT_NEAR(g(1.0), 1.0, 1e-15) << g.ToString();
    double previous = 0.0;
    for (int k = 0; k <= 1000; ++k) {
      const double p = k / 1000.0;
      const double value = g(p);
      EXPECT_GE(value, previous - 1e-15) << g.ToString() << " at " << p;
      previous = value;
      EXPECT_NEAR(1.0 - g.Dual(1.0 - p), value, 1e-15);
    }
  }
}

TEST(WeightingDominanceTest, IdentityPairHoldsWithZeroGap) {
  const WeightingFunction id = WeightingFunction::MakeIdentity();
  const WeightingDominance r = CheckWeightingDominance(id, id);
  EXPECT_TRUE(r.holds);
  // 1 - (1 - p) differs from p by at most one rounding.
  EXPECT_NEAR(r.max_gap, 0.0, 1e-15);
}

TEST(WeightingDominanceTest, GoldsteinEinhornPairHolds) {
  const WeightingDominance r =
      CheckWeightingDominance(WeightingFunction::MakeGoldsteinEinhorn(0.65, 0.60),
                              WeightingFunction::MakeGoldsteinEinhorn(0.84, 0.65));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.violations, 0);
  // Equality only at the endpoints.
  EXPECT_EQ(r.max_gap, 0.0);
  const WeightingFunction g = WeightingFunction::MakeGoldsteinEinhorn(0.65, 0.60);
  const WeightingFunction h = WeightingFunction::MakeGoldsteinEinhorn(0.84, 0.65);
  for (int k = 1; k < 1000; ++k) EXPECT_LT(g(k / 1000.0), h.Dual(k / 1000.0));
}

// The published Kahneman-Tversky and Prelec pairs fail dominance near p = 0.
// The gaps below are 40-digit evaluations of g(p) - (1 - h(1 - p)).
TEST(WeightingDominanceTest, KahnemanTverskyPairFailsNearZero) {
  const WeightingDominance r = CheckWeightingDominance(Kt(0.61), Kt(0.69));
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.argmax, 0.002, 1e-15);
  EXPECT_NEAR(r.max_gap, 0.0028175311958934540, 1e-15);
  EXPECT_EQ(r.violations, 10);
  EXPECT_NEAR(Kt(0.61)(0.01) - Kt(0.69).Dual(0.01), 0.00035298443364484755, 1e-15);
  EXPECT_LT(Kt(0.61)(0.011) - Kt(0.69).Dual(0.011), 0.0);
}

TEST(WeightingDominanceTest, PrelecPairFailsNearZero) {
  const WeightingFunction pr = WeightingFunction::MakePrelec(1.0, 0.74);
  const WeightingDominance r = CheckWeightingDominance(pr, pr);
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.argmax, 0.007, 1e-15);
  EXPECT_NEAR(r.max_gap, 0.012765797677419537, 1e-15);
  EXPECT_EQ(r.violations, 100);
  EXPECT_NEAR(pr(0.05) - pr.Dual(0.05), 7.5601783746356901e-05, 1e-15);
  EXPECT_LT(pr(0.051) - pr.Dual(0.051), 0.0);
}

TEST(FigureDataTest, GridOfTwo) {
  const std::vector<FigureRow> rows = FigureData(Kt(0.61), Kt(0.69), 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].p, 0.0);
  EXPECT_EQ(rows[0].g, 0.0);
  EXPECT_EQ(rows[0].h_bar, 0.0);
  EXPECT_EQ(rows[1].p, 1.0);
  EXPECT_NEAR(rows[1].g, 1.0, 1e-15);
  EXPECT_NEAR(rows[1].h_bar, 1.0, 1e-15);
}

TEST(FigureDataTest, RowCountAndCsv) {
  const std::vector<FigureRow> rows = FigureData(Kt(0.61), Kt(0.69));
  EXPECT_EQ(rows.size(), 1001u);
  std::ostringstream out;
  WriteFigureCsv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  int count = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "p,g,h_bar");
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 1001);
}

TEST(FigureDataTest, PrelecRowAtFixedPoint) {
  const WeightingFunction pr = WeightingFunction::MakePrelec(1.0, 0.74);
  const std::vector<FigureRow> rows = FigureData(pr, pr);
  // The grid point nearest 1/e is 0.368; the fixed point itself is checked
  // directly.
  EXPECT_NEAR(rows[368].p, 0.368, 1e-15);
  EXPECT_NEAR(pr(kInvE), kInvE, 1e-15);
  EXPECT_NEAR(rows[368].g, pr(0.368), 0.0);
}

}  // namespace
}  // namespace choquet
