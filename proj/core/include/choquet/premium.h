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

// Certainty-equivalent premiums u(w - pi) = C_{mu,nu}(u(w - X)), the
// risk-neutral premium, its second-order approximation, and sampled
// risk-aversion comparisons.

#ifndef CHOQUET_PREMIUM_H_
#define CHOQUET_PREMIUM_H_

#include <cstdint>
#include <optional>
#include <string>

#include "choquet/capacity.h"
#include "choquet/integral.h"
#include "choquet/sampling.h"
#include "choquet/utility.h"

namespace choquet {

inline constexpr double kPremiumTol = 1e-9;

struct Scenario {
  double wealth;
  RandomVariable outcome;
  Capacity mu;
  Capacity nu;
  UtilityFunction u;
};

// Empty when w - X is in the premium class of u; otherwise the reason
// (negative wealth, a value of w - X outside the domain, C(w - X) outside
// the domain, or C(u(w - X)) outside the range).
std::optional<std::string> PremiumClassFailure(const Scenario& s);

// w - u^{-1}(C_{mu,nu}(u(w - X))). Throws kOutOfClass with the reason from
// PremiumClassFailure.
double Premium(const Scenario& s);

// First-order bound on the rounding error of Premium(s): the utility values
// carry a relative error of a few ulps, which u^{-1} amplifies by
// 1 / u'(u^{-1}(C(u(w - X)))). Large where u saturates (exp:2 at 10 gives
// about 1e-8). Zero for kinked utilities at a kink, infinite where u' = 0.
double PremiumRoundoff(const Scenario& s);

// C_{nu,mu}(X) + int_0^w (conj(nu)(X < s) - mu(X < s)) ds, exact.
// Throws kInvalidArgument for w < 0.
double RiskNeutralPremium(double wealth, const RandomVariable& x, const Capacity& mu,
                          const Capacity& nu);
double RiskNeutralPremium(const Scenario& s);

// C_{nu,mu}(Y) + int_0^{u(w)/u'(w)} (conj(nu)(Y < t) - mu(Y < t)) dt with
// Y = X + r_u(w) X^2 / 2. Throws kNonDifferentiable or kZeroDerivative.
double ApproxPremium(const Scenario& s);

struct SamplerOptions {
  int n = 3;
  double wealth_lo = 0.0;
  double wealth_hi = 5.0;
  double outcome_lo = -5.0;
  double outcome_hi = 5.0;
  // Restrict every draw to X <= w pointwise.
  bool outcome_at_most_wealth = false;
};

struct Draw {
  double wealth;
  RandomVariable outcome;
};

// Deterministic given the seed. Next resamples until every value of w - X
// lies in the domain (at most 10000 attempts, then kInvalidArgument).
class ScenarioSampler {
 public:
  ScenarioSampler(SamplerOptions options, std::uint64_t seed);

  Draw Next(const Domain& domain);
  const SamplerOptions& options() const { return options_; }
  std::uint64_t seed() const { return seed_; }

 private:
  SamplerOptions options_;
  std::uint64_t seed_;
  Rng rng_;
};

struct PremiumWitness {
  double wealth = 0.0;
  std::vector<double> outcome;
  double premium = 0.0;
  // The premium compared against: pi_0 or the other agent's premium.
  double reference = 0.0;
  // reference - premium (> tolerance for a violation).
  double gap = 0.0;
};

struct RiskAversionVerdict {
  bool averse = true;
  int checked = 0;
  // Draws outside the premium class, excluded from the verdict.
  int skipped = 0;
  std::optional<PremiumWitness> witness;
};

// premium >= pi_0 - 1e-9 on `count` draws; stops at the first violation.
RiskAversionVerdict CheckRiskAverse(const UtilityFunction& u, const Capacity& mu,
                                    const Capacity& nu, ScenarioSampler& sampler,
                                    int count);

// Exhaustive two-point search for premium < pi_0 - 1e-9. X takes one value on
// a set S and another on its complement, both from a 21-point grid on
// [-5, 5], with w in {0, 0.5, 1, 2, 5}. Sets are tried starting from the
// dominance witness of (mu, nu), then in bitmask order.
std::optional<PremiumWitness> FindRiskAversionViolation(const UtilityFunction& u,
                                                        const Capacity& mu,
                                                        const Capacity& nu);

struct AgentComparison {
  // mu <= conj(nu) and some B has mu(B) > 0 and nu(B^c) > 0. When false the
  // verdicts are still computed but need not agree.
  bool hypotheses_hold = false;
  bool premium_order_holds = true;
  bool r_order_holds = true;
  bool g_concave = true;
  int checked = 0;
  int skipped = 0;
  std::optional<PremiumWitness> premium_witness;
  std::optional<double> r_witness;
  std::optional<double> g_witness;

  bool Agree() const {
    return premium_order_holds == r_order_holds && r_order_holds == g_concave;
  }
};

// premium_u >= premium_v - 1e-9 over `count` sampled draws plus the two-point
// grid on every set; r_u >= r_v - 1e-9 and g'' <= 1e-9 for g = u o v^{-1} on
// 201-point grids.
AgentComparison CompareAgents(const UtilityFunction& u, const UtilityFunction& v,
                              const Capacity& mu, const Capacity& nu,
                              ScenarioSampler& sampler, int count);

struct NonnegLossVerdict {
  bool averse = true;
  // Midpoint concavity of u on the domain grid restricted to x >= 0.
  bool concave_on_nonneg = true;
  int checked = 0;
  std::optional<PremiumWitness> witness;

  bool Agree() const { return averse == concave_on_nonneg; }
};

// Risk aversion with nu = conj(mu) for losses X <= w, over sampled draws and
// two-point outcomes with values in [w - 10, w]. Throws kZeroOneCapacity when
// mu is {0,1}-valued.
NonnegLossVerdict NonnegLossCheck(const UtilityFunction& u, const Capacity& mu,
                                  ScenarioSampler& sampler, int count);

}  // namespace choquet

#endif  // CHOQUET_PREMIUM_H_
