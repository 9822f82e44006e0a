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
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "choquet/error.h"
#include "choquet/sampling.h"
#include "test_util.h"

namespace choquet {
namespace {

using ::choquet::testing::Table;
using ::choquet::testing::WorkedMu;

TEST(SurvivalTest, Examples) {
  const Capacity mu = WorkedMu();
  const RandomVariable x = {4.0, -2.0};
  EXPECT_EQ(Survival(mu, x, -5.0), 1.0);
  EXPECT_DOUBLE_EQ(Survival(mu, x, 0.0), 0.3);
  EXPECT_DOUBLE_EQ(Survival(mu, x, 4.0, Tail::kNonStrict), 0.3);
  EXPECT_EQ(Survival(mu, x, 4.0, Tail::kStrict), 0.0);
  EXPECT_DOUBLE_EQ(LowerTail(mu, x, -2.0, Tail::kNonStrict), 0.5);
  EXPECT_EQ(LowerTail(mu, x, -2.0, Tail::kStrict), 0.0);
}

TEST(SurvivalTest, StrictAndNonStrictDifferOnlyAtAtoms) {
  const Capacity mu = WorkedMu();
  const RandomVariable x = {4.0, -2.0};
  for (int k = -60; k <= 60; ++k) {
    const double t = k / 10.0;
    if (t == 4.0 || t == -2.0) continue;
    EXPECT_EQ(Survival(mu, x, t, Tail::kStrict), Survival(mu, x, t, Tail::kNonStrict));
  }
}

TEST(GenChoquetTest, ConstantIsItsValue) {
  Rng rng(3);
  for (double c : {-3.5, 0.0, 2.25}) {
    const Capacity mu = RandomCapacity(3, rng);
    const Capacity nu = RandomCapacity(3, rng);
    EXPECT_DOUBLE_EQ(GenChoquet(mu, nu, RandomVariable::Constant(3, c)), c);
  }
}

TEST(GenChoquetTest, WorkedExample) {
  const Capacity mu = WorkedMu();
  const RandomVariable x = {4.0, -2.0};
  EXPECT_NEAR(GenChoquet(mu, Dual(mu), x), -0.2, 1e-15);
  EXPECT_NEAR(RiemannOracle(mu, Dual(mu), x, 1e-5), -0.2, 1e-4);
}

TEST(GenChoquetTest, AdditiveIsExpectation) {
  const std::vector<double> w = {0.5, 0.5};
  const Capacity p = FromProbability(w);
  EXPECT_DOUBLE_EQ(GenChoquet(p, p, {4.0, -2.0}), 1.0);
}

TEST(GenChoquetTest, MismatchedSizesThrow) {
  EXPECT_THROWS_CODE(GenChoquet(WorkedMu(), WorkedMu(), RandomVariable{1.0, 2.0, 3.0}),
                     ErrorCode::kGroundSetMismatch);
  EXPECT_THROWS_CODE(GenChoquet(WorkedMu(), Table({0.0, 1.0}), RandomVariable{1.0, 2.0}),
                     ErrorCode::kGroundSetMismatch);
}

TEST(ChoquetTest, Examples) {
  const Capacity mu = WorkedMu();
  EXPECT_DOUBLE_EQ(Choquet(mu, {1.0, 3.0}), 2.0);
  EXPECT_NEAR(RiemannOracle(mu, Dual(mu), {1.0, 3.0}, 1e-5), 2.0, 1e-4);
  // Nonnegative X never reaches nu.
  const Capacity other = Table({0.0, 0.9, 0.1, 1.0});
  EXPECT_DOUBLE_EQ(Choquet(mu, {1.0, 3.0}), GenChoquet(mu, other, {1.0, 3.0}));
}

TEST(SiposTest, OddSymmetry) {
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    const Capacity mu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    EXPECT_NEAR(Sipos(mu, x.Scaled(-1.0)), -Sipos(mu, x), 1e-12);
  }
}

TEST(RiemannOracleTest, ConstantAndStep) {
  const Capacity mu = WorkedMu();
  EXPECT_NEAR(RiemannOracle(mu, mu, RandomVariable::Constant(2, 2.5), 1e-5), 2.5, 1e-4);
  EXPECT_THROWS_CODE(RiemannOracle(mu, mu, {1.0, 2.0}, 0.0), ErrorCode::kInvalidArgument);
}

TEST(RiemannOracleTest, AgreesWithExactEvaluation) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const Capacity mu = RandomCapacity(n, rng);
    const Capacity nu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -100.0, 100.0, rng);
    const double step = 1e-2;
    EXPECT_LE(std::abs(GenChoquet(mu, nu, x) - RiemannOracle(mu, nu, x, step)),
              (n + 1) * step);
  }
}

TEST(NonStrictTailsTest, AgreeWithStrictTails) {
  Rng rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const Capacity mu = RandomCapacity(n, rng);
    const Capacity nu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    EXPECT_NEAR(GenChoquetNonStrict(mu, nu, x), GenChoquet(mu, nu, x), 1e-12);
  }
}

TEST(ScaleTest, Examples) {
  const Capacity mu = WorkedMu();
  const Capacity nu = Dual(mu);
  const RandomVariable x = {4.0, -2.0};
  EXPECT_EQ(Scale(mu, nu, x, 0.0), 0.0);
  EXPECT_NEAR(Scale(mu, nu, x, 2.0), -0.4, 1e-15);
  EXPECT_NEAR(Scale(mu, nu, x, -1.0), -GenChoquet(nu, mu, x), 1e-15);
}

TEST(ScaleTest, HomogeneityAndSignFlip) {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const Capacity mu = RandomCapacity(n, rng);
    const Capacity nu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    const double b = rng.Uniform(-5.0, 5.0);
    const double expected = b >= 0.0 ? b * GenChoquet(mu, nu, x) : b * GenChoquet(nu, mu, x);
    EXPECT_NEAR(Scale(mu, nu, x, b), expected, 1e-9);
  }
}

TEST(MonotonicityTest, PointwiseOrderIsPreserved) {
  Rng rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const Capacity mu = RandomCapacity(n, rng);
    const Capacity nu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    std::vector<double> y(x.values().begin(), x.values().end());
    for (double& v : y) v += rng.Coin() ? rng.Uniform(0.0, 3.0) : 0.0;
    EXPECT_LE(GenChoquet(mu, nu, x), GenChoquet(mu, nu, RandomVariable(y)) + 1e-12);
  }
}

TEST(TranslationTest, Examples) {
  const Capacity mu = WorkedMu();
  const RandomVariable x = {4.0, -2.0};
  const TranslationGap dual = ComputeTranslationGap(mu, Dual(mu), x, 1.7);
  EXPECT_NEAR(dual.correction, 0.0, 1e-15);
  EXPECT_NEAR(dual.lhs, 0.0, 1e-12);

  const TranslationGap zero = ComputeTranslationGap(mu, mu, x, 0.0);
  EXPECT_EQ(zero.correction, 0.0);
  EXPECT_NEAR(zero.lhs, 0.0, 1e-15);

  const Capacity u1 = Unanimity(GroundSet(2), 0b01);
  const TranslationGap un = ComputeTranslationGap(u1, u1, x, 3.0);
  EXPECT_EQ(un.correction, 0.0);
  EXPECT_NEAR(un.lhs, un.correction, 1e-12);
}

TEST(TranslationTest, IdentityOnRandomInstances) {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 6;
    const Capacity mu = RandomCapacity(n, rng);
    const Capacity nu = RandomCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    const double a = rng.Uniform(-10.0, 10.0);
    const TranslationGap gap = ComputeTranslationGap(mu, nu, x, a);
    EXPECT_NEAR(gap.lhs, gap.correction, 1e-9);
  }
}

TEST(ZeroOneSplitTest, Examples) {
  const std::vector<double> dirac = {1.0, 0.0};
  const Capacity d = FromProbability(dirac);
  const ZeroOneSplit s1 = ComputeZeroOneSplit(d, d, {4.0, -2.0});
  EXPECT_EQ(s1.a, 0.0);
  EXPECT_EQ(s1.b, 4.0);
  EXPECT_EQ(GenChoquet(d, d, {4.0, -2.0}), 4.0);

  const Capacity u1 = Unanimity(GroundSet(2), 0b01);
  const Capacity u2 = Unanimity(GroundSet(2), 0b10);
  const ZeroOneSplit s2 = ComputeZeroOneSplit(u1, u2, {3.0, -1.0});
  EXPECT_EQ(s2.a, -1.0);
  EXPECT_EQ(s2.b, 3.0);
  EXPECT_EQ(GenChoquet(u1, u2, {3.0, -1.0}), 2.0);

  EXPECT_EQ(ComputeZeroOneSplit(u1, u2, {3.0, 1.0}).a, 0.0);
  EXPECT_THROWS_CODE(ComputeZeroOneSplit(WorkedMu(), u2, {3.0, 1.0}),
                     ErrorCode::kNotZeroOneValued);
}

TEST(ZeroOneSplitTest, IntegralIsSumOfSplitPoints) {
  Rng rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 5;
    const Capacity mu = RandomZeroOneCapacity(n, rng);
    const Capacity nu = RandomZeroOneCapacity(n, rng);
    const RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    const ZeroOneSplit s = ComputeZeroOneSplit(mu, nu, x);
    EXPECT_EQ(GenChoquet(mu, nu, x), s.a + s.b);
  }
}

TEST(InLTest, Examples) {
  const Capacity mu = WorkedMu();
  EXPECT_TRUE(InL(mu, mu, {100.0, -100.0}, Interval::Real()));
  EXPECT_TRUE(InL(mu, mu, RandomVariable::Constant(2, 2.0), Interval(-1.0, 5.0)));
  EXPECT_FALSE(InL(mu, mu, {4.0, -2.0}, Interval(-1.0, 5.0)));
  EXPECT_THROWS_CODE(Interval(1.0, 2.0), ErrorCode::kInvalidArgument);
}

TEST(IntegrateStepTest, OrientedIntegral) {
  const std::vector<double> breaks = {1.0};
  auto f = [](double t) { return t < 1.0 ? 2.0 : 3.0; };
  EXPECT_DOUBLE_EQ(IntegrateStep(f, breaks, 0.0, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(IntegrateStep(f, breaks, 2.0, 0.0), -5.0);
  EXPECT_EQ(IntegrateStep(f, breaks, 1.0, 1.0), 0.0);
}

TEST(RandomVariableTest, Validation) {
  EXPECT_THROWS_CODE(RandomVariable(std::vector<double>{}), ErrorCode::kInvalidArgument);
  EXPECT_THROWS_CODE(RandomVariable({1.0, std::numeric_limits<double>::infinity()}),
                     ErrorCode::kInvalidArgument);
  EXPECT_EQ(RandomVariable::TwoPoint(3, 0b101, 2.0, -1.0), RandomVariable({2.0, -1.0, 2.0}));
}

}  // namespace
}  // namespace choquet
