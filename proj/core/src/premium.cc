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

#include "choquet/premium.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "choquet/error.h"

namespace choquet {
namespace {

constexpr int kMaxResample = 10000;
constexpr int kTwoPointGrid = 21;
constexpr double kTwoPointLo = -5.0;
constexpr double kTwoPointHi = 5.0;
constexpr double kWealthGrid[] = {0.0, 0.5, 1.0, 2.0, 5.0};

std::vector<double> UniformGrid(double lo, double hi, int count) {
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) grid[k] = lo + (hi - lo) * k / (count - 1);
  return grid;
}

// int_0^upper (conj(nu)(Z < t) - mu(Z < t)) dt with conj(nu)(Z < t) equal to
// 1 - nu(Z >= t).
double RiskNeutralCorrection(const Capacity& mu, const Capacity& nu,
                             const RandomVariable& z, double upper) {
  return IntegrateStep(
      [&](double t) {
        const double dual_lower = 1.0 - nu(UpperEvent(z, t, Tail::kNonStrict));
        return dual_lower - mu(LowerEvent(z, t, Tail::kStrict));
      },
      z.values(), 0.0, upper);
}

PremiumWitness MakeWitness(const Scenario& s, double premium, double reference) {
  PremiumWitness w;
  w.wealth = s.wealth;
  w.outcome.assign(s.outcome.values().begin(), s.outcome.values().end());
  w.premium = premium;
  w.reference = reference;
  w.gap = reference - premium;
  return w;
}

// Calls visit(set, wealth, outcome) over the two-point grid, sets in the
// given order. Stops when visit returns true.
template <class Visit>
bool ForEachTwoPoint(int n, const std::vector<Subset>& sets, std::span<const double> wealths,
                     std::span<const double> values, Visit&& visit) {
  for (Subset set : sets) {
    for (double w : wealths) {
      for (double b : values) {
        for (double a : values) {
          if (visit(w, RandomVariable::TwoPoint(n, set, b, a))) return true;
        }
      }
    }
  }
  return false;
}

std::vector<Subset> ProperSets(const GroundSet& ground, std::optional<Subset> first) {
  std::vector<Subset> sets;
  if (first && *first != 0 && *first != ground.full()) sets.push_back(*first);
  for (Subset a = 1; a < ground.full(); ++a) {
    if (!first || a != *first) sets.push_back(a);
  }
  return sets;
}

}  // namespace

std::optional<std::string> PremiumClassFailure(const Scenario& s) {
  if (!(s.wealth >= 0.0) || !std::isfinite(s.wealth)) {
    return fmt::format("wealth {} is not a finite nonnegative number", s.wealth);
  }
  const Domain& domain = s.u.domain();
  for (double x : s.outcome.values()) {
    if (!domain.Contains(s.wealth - x)) {
      return fmt::format("w - X takes the value {}, outside the utility domain",
                         s.wealth - x);
    }
  }
  const RandomVariable z = s.outcome.SubtractedFrom(s.wealth);
  const double cz = GenChoquet(s.mu, s.nu, z);
  if (!domain.Contains(cz)) {
    return fmt::format("C(w - X) = {} lies outside the utility domain", cz);
  }
  const double cu = GenChoquet(s.mu, s.nu, z.Map([&](double v) { return s.u(v); }));
  if (!s.u.range().Contains(cu)) {
    return fmt::format("C(u(w - X)) = {} lies outside the utility range", cu);
  }
  return std::nullopt;
}

double Premium(const Scenario& s) {
  if (auto failure = PremiumClassFailure(s)) {
    throw Error(ErrorCode::kOutOfClass, *failure);
  }
  const RandomVariable utilities =
      s.outcome.SubtractedFrom(s.wealth).Map([&](double v) { return s.u(v); });
  return s.wealth - s.u.Inverse(GenChoquet(s.mu, s.nu, utilities));
}

double PremiumRoundoff(const Scenario& s) {
  constexpr double kUlps = 8.0 * std::numeric_limits<double>::epsilon();
  const RandomVariable z = s.outcome.SubtractedFrom(s.wealth);
  double scale = 0.0;
  for (double v : z.values()) scale = std::max(scale, std::abs(s.u(v)));
  const double base = kUlps * (std::abs(s.wealth) + std::abs(z.max()) + std::abs(z.min()));
  const double x = s.u.Inverse(GenChoquet(s.mu, s.nu, z.Map([&](double v) { return s.u(v); })));
  double slope = 0.0;
  try {
    slope = s.u.Prime(x);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonDifferentiable) throw;
    return base;
  }
  if (!(slope > 0.0)) return std::numeric_limits<double>::infinity();
  return base + kUlps * scale / slope;
}

double RiskNeutralPremium(double wealth, const RandomVariable& x, const Capacity& mu,
                          const Capacity& nu) {
  if (!(wealth >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("wealth {} is negative", wealth));
  }
  return GenChoquet(nu, mu, x) + RiskNeutralCorrection(mu, nu, x, wealth);
}

double RiskNeutralPremium(const Scenario& s) {
  return RiskNeutralPremium(s.wealth, s.outcome, s.mu, s.nu);
}

double ApproxPremium(const Scenario& s) {
  const double r = ArrowPratt(s.u, s.wealth);
  const double upper = s.u(s.wealth) / s.u.Prime(s.wealth);
  const RandomVariable y = s.outcome.Map([r](double x) { return x + 0.5 * r * x * x; });
  return GenChoquet(s.nu, s.mu, y) + RiskNeutralCorrection(s.mu, s.nu, y, upper);
}

ScenarioSampler::ScenarioSampler(SamplerOptions options, std::uint64_t seed)
    : options_(options), seed_(seed), rng_(seed) {
  if (options_.n < 1 || options_.n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("sampler n = {}", options_.n));
  }
  if (!(options_.wealth_lo >= 0.0 && options_.wealth_lo <= options_.wealth_hi) ||
      !(options_.outcome_lo <= options_.outcome_hi)) {
    throw Error(ErrorCode::kInvalidArgument, "sampler ranges are empty or negative");
  }
}

Draw ScenarioSampler::Next(const Domain& domain) {
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    const double w = rng_.Uniform(options_.wealth_lo, options_.wealth_hi);
    const double hi =
        options_.outcome_at_most_wealth ? std::min(options_.outcome_hi, w) : options_.outcome_hi;
    if (hi < options_.outcome_lo) continue;
    RandomVariable x = RandomOutcome(options_.n, options_.outcome_lo, hi, rng_);
    bool inside = true;
    for (double v : x.values()) inside = inside && domain.Contains(w - v);
    if (inside) return Draw{w, std::move(x)};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "sampler could not draw w - X inside the utility domain");
}

RiskAversionVerdict CheckRiskAverse(const UtilityFunction& u, const Capacity& mu,
                                    const Capacity& nu, ScenarioSampler& sampler,
                                    int count) {
  RiskAversionVerdict verdict;
  for (int k = 0; k < count; ++k) {
    Draw draw = sampler.Next(u.domain());
    const Scenario s{draw.wealth, std::move(draw.outcome), mu, nu, u};
    if (PremiumClassFailure(s)) {
      ++verdict.skipped;
      continue;
    }
    ++verdict.checked;
    const double premium = Premium(s);
    const double neutral = RiskNeutralPremium(s);
    if (premium < neutral - kPremiumTol - PremiumRoundoff(s)) {
      verdict.averse = false;
      verdict.witness = MakeWitness(s, premium, neutral);
      break;
    }
  }
  return verdict;
}

std::optional<PremiumWitness> FindRiskAversionViolation(const UtilityFunction& u,
                                                        const Capacity& mu,
                                                        const Capacity& nu) {
  const DominanceResult dominance = DominatesDual(mu, nu);
  const std::optional<Subset> seed =
      dominance.holds ? std::nullopt : std::optional<Subset>(dominance.worst);
  const std::vector<double> values = UniformGrid(kTwoPointLo, kTwoPointHi, kTwoPointGrid);
  std::optional<PremiumWitness> witness;
  ForEachTwoPoint(mu.n(), ProperSets(mu.ground(), seed), kWealthGrid, values,
                  [&](double w, RandomVariable x) {
                    const Scenario s{w, std::move(x), mu, nu, u};
                    if (PremiumClassFailure(s)) return false;
                    const double premium = Premium(s);
                    const double neutral = RiskNeutralPremium(s);
                    if (premium < neutral - kPremiumTol - PremiumRoundoff(s)) {
                      witness = MakeWitness(s, premium, neutral);
                      return true;
                    }
                    return false;
                  });
  return witness;
}

AgentComparison CompareAgents(const UtilityFunction& u, const UtilityFunction& v,
                              const Capacity& mu, const Capacity& nu,
                              ScenarioSampler& sampler, int count) {
  AgentComparison result;
  result.hypotheses_hold =
      DominatesDual(mu, nu).holds && FindCoexistenceSet(mu, nu).has_value();
  const Domain common = u.domain().Intersect(v.domain());

  auto compare = [&](double w, const RandomVariable& x) {
    const Scenario su{w, x, mu, nu, u};
    const Scenario sv{w, x, mu, nu, v};
    if (PremiumClassFailure(su) || PremiumClassFailure(sv)) {
      ++result.skipped;
      return false;
    }
    ++result.checked;
    const double pu = Premium(su);
    const double pv = Premium(sv);
    if (pu < pv - kPremiumTol - PremiumRoundoff(su) - PremiumRoundoff(sv)) {
      result.premium_order_holds = false;
      result.premium_witness = MakeWitness(su, pu, pv);
      return true;
    }
    return false;
  };
  for (int k = 0; k < count && result.premium_order_holds; ++k) {
    const Draw draw = sampler.Next(common);
    compare(draw.wealth, draw.outcome);
  }
  if (result.premium_order_holds) {
    const std::vector<double> values = UniformGrid(kTwoPointLo, kTwoPointHi, kTwoPointGrid);
    ForEachTwoPoint(mu.n(), ProperSets(mu.ground(), std::nullopt), kWealthGrid, values,
                    [&](double w, const RandomVariable& x) { return compare(w, x); });
  }

  for (double x : MakeGrid(common)) {
    try {
      if (ArrowPratt(u, x) < ArrowPratt(v, x) - kPremiumTol) {
        result.r_order_holds = false;
        result.r_witness = x;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNonDifferentiable) throw;
    }
  }

  const ComposedUtility g(u, v);
  for (double x : MakeGrid(g.domain())) {
    try {
      if (g.Second(x) > kPremiumTol) {
        result.g_concave = false;
        result.g_witness = x;
        break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNonDifferentiable) throw;
    }
  }
  return result;
}

NonnegLossVerdict NonnegLossCheck(const UtilityFunction& u, const Capacity& mu,
                                  ScenarioSampler& sampler, int count) {
  if (IsZeroOneValued(mu)) {
    throw Error(ErrorCode::kZeroOneCapacity, "mu must not be {0,1}-valued");
  }
  if (!sampler.options().outcome_at_most_wealth) {
    throw Error(ErrorCode::kInvalidArgument, "sampler must enforce X <= w");
  }
  const Capacity nu = Dual(mu);
  NonnegLossVerdict verdict;

  std::vector<double> nonneg;
  for (double x : MakeGrid(u.domain())) {
    if (x >= 0.0) nonneg.push_back(x);
  }
  verdict.concave_on_nonneg = CheckConcave(u, nonneg).holds;

  auto check = [&](double w, const RandomVariable& x) {
    const Scenario s{w, x, mu, nu, u};
    if (PremiumClassFailure(s)) return false;
    ++verdict.checked;
    const double premium = Premium(s);
    const double neutral = RiskNeutralPremium(s);
    if (premium < neutral - kPremiumTol - PremiumRoundoff(s)) {
      verdict.averse = false;
      verdict.witness = MakeWitness(s, premium, neutral);
      return true;
    }
    return false;
  };
  const Domain nonneg_domain = u.domain().Intersect(
      Domain{0.0, std::numeric_limits<double>::infinity(), true, false});
  for (int k = 0; k < count && verdict.averse; ++k) {
    const Draw draw = sampler.Next(nonneg_domain);
    check(draw.wealth, draw.outcome);
  }
  if (verdict.averse) {
    // Outcomes w - z with z on a grid of [0, 10].
    for (double w : kWealthGrid) {
      std::vector<double> values;
      for (double z : UniformGrid(0.0, 10.0, kTwoPointGrid)) {
        if (u.domain().Contains(z)) values.push_back(w - z);
      }
      if (ForEachTwoPoint(mu.n(), ProperSets(mu.ground(), std::nullopt),
                          std::span<const double>(&w, 1), values,
                          [&](double wealth, const RandomVariable& x) {
                            return check(wealth, x);
                          })) {
        break;
      }
    }
  }
  return verdict;
}

}  // namespace choquet
