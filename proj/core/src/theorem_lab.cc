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

#include "choquet/theorem_lab.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "choquet/error.h"
#include "choquet/sampling.h"
#include "choquet/tolerance.h"
#include "parse_util.h"

namespace choquet {
namespace {

constexpr int kTheoremCount = 8;

std::vector<double> ToVector(std::span<const double> values) {
  return {values.begin(), values.end()};
}

Witness MakeWitness(const Capacity& mu, const Capacity& nu, const RandomVariable& x,
                    std::string function, double gap) {
  return Witness{ToVector(mu.table()), ToVector(nu.table()), ToVector(x.values()),
                 std::move(function), gap};
}

std::vector<double> InDomain(std::span<const double> values, const Domain& domain) {
  std::vector<double> out;
  for (double v : values) {
    if (domain.Contains(v)) out.push_back(v);
  }
  return out;
}

bool AllInDomain(const RandomVariable& x, const Domain& domain) {
  for (double v : x.values()) {
    if (!domain.Contains(v)) return false;
  }
  return true;
}

std::string FormatVector(std::span<const double> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += fmt::format("{}", values[i]);
  }
  return s + "]";
}

}  // namespace

CapacityEnumerator::CapacityEnumerator(int n, std::vector<double> levels)
    : n_(n), levels_(std::move(levels)) {
  if (n_ > 3) {
    throw Error(ErrorCode::kTooLarge,
                fmt::format("full enumeration supports n <= 3, got {}", n_));
  }
  if (n_ < 1) throw Error(ErrorCode::kInvalidArgument, "enumeration needs n >= 1");
  if (levels_.size() < 2 || levels_.front() != 0.0 || levels_.back() != 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "levels must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (!(levels_[i] > levels_[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "levels must be strictly increasing");
    }
  }
}

namespace {

// Assigns level indices to subsets 1 .. full-1 in bitmask order, each at
// least the indices of its immediate subsets.
void Assign(int n, Subset a, std::vector<int>& index, int top,
            const std::function<void()>& leaf) {
  const Subset full = static_cast<Subset>((1u << n) - 1);
  if (a == full) {
    leaf();
    return;
  }
  int lower = 0;
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset{1} << i;
    if (a & bit) lower = std::max(lower, index[a & ~bit]);
  }
  for (int k = lower; k <= top; ++k) {
    index[a] = k;
    Assign(n, a + 1, index, top, leaf);
  }
}

}  // namespace

void CapacityEnumerator::ForEach(const std::function<void(const Capacity&)>& visit) const {
  const GroundSet ground(n_);
  const int top = static_cast<int>(levels_.size()) - 1;
  std::vector<int> index(ground.subset_count(), 0);
  index[ground.full()] = top;
  Assign(n_, 1, index, top, [&] {
    std::vector<double> table(index.size());
    for (std::size_t a = 0; a < index.size(); ++a) table[a] = levels_[index[a]];
    visit(Capacity::Create(ground, std::move(table)));
  });
}

std::vector<Capacity> CapacityEnumerator::All() const {
  std::vector<Capacity> all;
  ForEach([&](const Capacity& c) { all.push_back(c); });
  return all;
}

std::size_t CapacityEnumerator::Count() const {
  const GroundSet ground(n_);
  const int top = static_cast<int>(levels_.size()) - 1;
  std::vector<int> index(ground.subset_count(), 0);
  index[ground.full()] = top;
  std::size_t count = 0;
  Assign(n_, 1, index, top, [&] { ++count; });
  return count;
}

const char* TheoremName(TheoremId id) {
  switch (id) {
    case TheoremId::kLemmaC1: return "lemma-c1";
    case TheoremId::kLemmaC2: return "lemma-c2";
    case TheoremId::kLemmaC3: return "lemma-c3";
    case TheoremId::kLemmaC4: return "lemma-c4";
    case TheoremId::kTheorem1: return "theorem-1";
    case TheoremId::kTheorem2: return "theorem-2";
    case TheoremId::kTheorem3: return "theorem-3";
    case TheoremId::kTheorem4: return "theorem-4";
  }
  return "?";
}

ProbeFunction ProbeFunction::FromUtility(const UtilityFunction& u) {
  return ProbeFunction{u.ToString(), [u](double x) { return u(x); }, u.domain()};
}

ProbeFunction ProbeFunction::Affine(double shift) {
  return ProbeFunction{fmt::format("x+{}", shift), [shift](double x) { return x + shift; },
                       Domain::Real()};
}

ProbeFunction ProbeFunction::FromName(std::string_view name) {
  const std::string_view trimmed = internal::Trim(name);
  if (trimmed.substr(0, 2) == "x+") return Affine(internal::ParseNumber(trimmed.substr(2)));
  return FromUtility(UtilityFunction::Parse(trimmed));
}

double JensenGap(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                 const RandomVariable& x) {
  return GenChoquet(mu, nu, x.Map(f.f)) - f.f(GenChoquet(mu, nu, x));
}

double ReevaluateWitness(const Witness& witness) {
  const int n = std::countr_zero(witness.mu.size());
  const GroundSet ground(n);
  const Capacity mu = Capacity::Create(ground, witness.mu);
  const Capacity nu = Capacity::Create(ground, witness.nu);
  return JensenGap(mu, nu, ProbeFunction::FromName(witness.function),
                   RandomVariable(witness.x));
}

ProbeFunction RandomMonotoneTable(Shape shape, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> xs = {-5.0, rng.Uniform(-4.5, -2.5), rng.Uniform(-2.0, -0.5), 0.0,
                            rng.Uniform(0.5, 2.0), rng.Uniform(2.5, 4.5), 5.0};
  std::vector<double> slopes(xs.size() - 1);
  for (double& s : slopes) s = rng.Uniform(0.2, 3.0);
  if (shape == Shape::kConcave) std::sort(slopes.rbegin(), slopes.rend());
  if (shape == Shape::kConvex) std::sort(slopes.begin(), slopes.end());
  std::vector<double> ys(xs.size(), 0.0);
  constexpr std::size_t kZero = 3;
  for (std::size_t i = kZero + 1; i < xs.size(); ++i) {
    ys[i] = ys[i - 1] + slopes[i - 1] * (xs[i] - xs[i - 1]);
  }
  for (std::size_t i = kZero; i-- > 0;) ys[i] = ys[i + 1] - slopes[i] * (xs[i + 1] - xs[i]);
  std::vector<std::pair<double, double>> knots;
  for (std::size_t i = 0; i < xs.size(); ++i) knots.emplace_back(xs[i], ys[i]);
  // Round-trip through the name so that witnesses re-evaluate bit-identically.
  return ProbeFunction::FromName(UtilityFunction::MakeTable(std::move(knots)).ToString());
}

std::vector<ProbeFunction> ConcaveGallery() {
  std::vector<ProbeFunction> gallery = {ProbeFunction::Affine(2.0)};
  for (const char* spec : {"linear", "exp:1", "exp:0.5", "log:1", "power:4,0.5", "kink"}) {
    gallery.push_back(ProbeFunction::FromName(spec));
  }
  gallery.push_back(RandomMonotoneTable(Shape::kConcave, 101));
  gallery.push_back(RandomMonotoneTable(Shape::kConcave, 102));
  return gallery;
}

std::vector<ProbeFunction> ConvexGallery() {
  std::vector<ProbeFunction> gallery;
  for (const char* spec : {"convexp:1", "convexp:0.5", "quad:0.5"}) {
    gallery.push_back(ProbeFunction::FromName(spec));
  }
  gallery.push_back(RandomMonotoneTable(Shape::kConvex, 201));
  gallery.push_back(RandomMonotoneTable(Shape::kConvex, 202));
  return gallery;
}

std::vector<ProbeFunction> ZeroOneGallery() {
  std::vector<ProbeFunction> gallery;
  for (const char* spec : {"exp:1", "kink", "negsqrt", "log:1", "linear", "convexp:1",
                           "quad:0.5", "power:4,0.5", "table:-2/-2,-1/-0.2,0/0,1/2,2/2.2"}) {
    gallery.push_back(ProbeFunction::FromName(spec));
  }
  gallery.push_back(RandomMonotoneTable(Shape::kAny, 301));
  gallery.push_back(RandomMonotoneTable(Shape::kAny, 302));
  return gallery;
}

std::vector<ProbeFunction> NonnegativeGallery() {
  std::vector<ProbeFunction> gallery;
  for (const char* spec : {"exp:1", "power:0,0.5", "log:1", "kink", "negsqrt", "linear",
                           "convexp:1", "quad:0.5"}) {
    gallery.push_back(ProbeFunction::FromName(spec));
  }
  gallery.push_back(RandomMonotoneTable(Shape::kConcave, 401));
  gallery.push_back(RandomMonotoneTable(Shape::kConvex, 402));
  return gallery;
}

std::vector<double> ValueGrid(double lo, double hi, int count) {
  if (count < 2 || !(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "bad value grid");
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) grid[k] = lo + (hi - lo) * k / (count - 1);
  return grid;
}

std::vector<RandomVariable> TwoPointGrid(int n, std::span<const double> values) {
  std::vector<RandomVariable> xs;
  if (n == 1) {
    for (double v : values) xs.push_back(RandomVariable::Constant(1, v));
    return xs;
  }
  const GroundSet ground(n);
  for (Subset b = 1; b < ground.full(); ++b) {
    if (b > ground.Complement(b)) continue;
    for (double hi : values) {
      for (double lo : values) xs.push_back(RandomVariable::TwoPoint(n, b, hi, lo));
    }
  }
  return xs;
}

std::vector<Verdict> CheckLemma(const Capacity& mu, const Capacity& nu, int sample_count,
                                std::uint64_t seed) {
  std::vector<Verdict> verdicts(4);
  verdicts[0].id = TheoremId::kLemmaC1;
  verdicts[1].id = TheoremId::kLemmaC2;
  verdicts[2].id = TheoremId::kLemmaC3;
  verdicts[3].id = TheoremId::kLemmaC4;
  Rng rng(seed);
  const int n = mu.n();
  auto record = [&](Verdict& v, double gap, const RandomVariable& x, std::string what) {
    ++v.checked;
    if (gap > kViolationTol && v.holds) {
      v.holds = false;
      v.witness = MakeWitness(mu, nu, x, std::move(what), gap);
    }
  };
  for (int k = 0; k < sample_count; ++k) {
    RandomVariable x = RandomOutcome(n, -10.0, 10.0, rng);
    // Every other sample uses half-integers so that ties and atoms at the
    // integration limits occur.
    if (k % 2 == 1) x = x.Map([](double v) { return std::round(2.0 * v) / 2.0; });
    const double c = GenChoquet(mu, nu, x);

    record(verdicts[0], std::abs(c - GenChoquetNonStrict(mu, nu, x)), x, "non-strict tails");

    std::vector<double> raised(x.values().begin(), x.values().end());
    for (double& v : raised) {
      if (rng.Coin()) v += rng.Uniform(0.0, 5.0);
    }
    const RandomVariable y(raised);
    record(verdicts[1], c - GenChoquet(mu, nu, y), x,
           fmt::format("Y = {}", FormatVector(y.values())));

    const double b = rng.Uniform(-5.0, 5.0);
    const double expected = b > 0.0 ? b * c : b * GenChoquet(nu, mu, x);
    record(verdicts[2], std::abs(Scale(mu, nu, x, b) - expected), x, fmt::format("b = {}", b));

    const double a = k % 2 == 1 ? std::round(rng.Uniform(-10.0, 10.0)) : rng.Uniform(-10.0, 10.0);
    const TranslationGap t = ComputeTranslationGap(mu, nu, x, a);
    record(verdicts[3], std::abs(t.lhs - t.correction), x, fmt::format("a = {}", a));
  }
  return verdicts;
}

Verdict JensenHolds(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                    std::span<const RandomVariable> xs) {
  Verdict verdict;
  for (const RandomVariable& x : xs) {
    if (!AllInDomain(x, f.domain) || !f.domain.Contains(GenChoquet(mu, nu, x))) continue;
    ++verdict.checked;
    const double gap = JensenGap(mu, nu, f, x);
    if (gap > kViolationTol) {
      verdict.holds = false;
      verdict.witness = MakeWitness(mu, nu, x, f.name, gap);
      break;
    }
  }
  return verdict;
}

std::optional<Witness> JensenCounterexample(const Capacity& mu, const Capacity& nu) {
  const DominanceResult dominance = DominatesDual(mu, nu);
  if (dominance.holds) return std::nullopt;
  const RandomVariable x = RandomVariable::TwoPoint(mu.n(), dominance.worst, 0.0, -1.0);
  const ProbeFunction f = ProbeFunction::Affine(2.0);
  return MakeWitness(mu, nu, x, f.name, JensenGap(mu, nu, f, x));
}

Thm2Result Thm2Check(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values) {
  if (!IsZeroOneValued(mu) || !IsZeroOneValued(nu)) {
    throw Error(ErrorCode::kNotZeroOneValued, "both capacities must be {0,1}-valued");
  }
  Thm2Result result;
  result.verdict.id = TheoremId::kTheorem2;
  const GroundSet& ground = mu.ground();
  for (Subset b = 0; b < ground.subset_count(); ++b) {
    if (mu(b) == 1.0 && nu(ground.Complement(b)) == 1.0) {
      result.coexistence = b;
      break;
    }
  }
  const std::vector<double> grid = InDomain(values, f.domain);
  result.weakly_superadditive = CheckWeaklySuperadditive(f.f, f.domain, grid).holds;

  for (const RandomVariable& x : TwoPointGrid(mu.n(), grid)) {
    const double cx = GenChoquet(mu, nu, x);
    if (!f.domain.Contains(cx)) continue;
    const double lhs = GenChoquet(mu, nu, x.Map(f.f));
    const ZeroOneSplit split = ComputeZeroOneSplit(mu, nu, x);
    if (f.domain.Contains(split.a) && f.domain.Contains(split.b)) {
      const double rhs = f.f(split.a) + f.f(split.b);
      const double error = std::abs(lhs - rhs);
      result.identity_max_error = std::max(result.identity_max_error, error);
      if (error > kStructuralTol * (1.0 + std::abs(rhs))) result.identity_holds = false;
    }
    ++result.verdict.checked;
    const double gap = lhs - f.f(cx);
    if (gap > kViolationTol && result.verdict.holds) {
      result.verdict.holds = false;
      result.verdict.witness = MakeWitness(mu, nu, x, f.name, gap);
    }
  }
  result.consistent = result.coexistence
                          ? result.verdict.holds == result.weakly_superadditive
                          : result.verdict.holds;
  return result;
}

Thm3Result Thm3Probe(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values) {
  if (!DominatesDual(mu, nu).holds) {
    throw Error(ErrorCode::kHypothesisFailure, "mu <= conj(nu) fails");
  }
  const std::optional<Subset> set = FindCoexistenceSet(mu, nu);
  if (!set) {
    throw Error(ErrorCode::kHypothesisFailure, "no B with mu(B) > 0 and nu(B^c) > 0");
  }
  Thm3Result result;
  result.verdict.id = TheoremId::kTheorem3;
  result.set = *set;
  result.p = mu(*set);
  result.q = nu(mu.ground().Complement(*set));
  const std::vector<double> grid = InDomain(values, f.domain);
  result.grid_concave = CheckConcave(f.f, grid).holds;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double a = grid[i];
      const double b = grid[j];
      const RandomVariable x = RandomVariable::TwoPoint(mu.n(), *set, b, a);
      if (!f.domain.Contains(GenChoquet(mu, nu, x))) continue;
      ++result.verdict.checked;
      const double gap = JensenGap(mu, nu, f, x);
      if (gap <= kViolationTol) continue;
      if (a >= 0.0) {
        result.nonnegative_holds = false;
      } else if (b <= 0.0) {
        result.nonpositive_holds = false;
      } else {
        result.straddling_holds = false;
      }
      if (result.verdict.holds) {
        result.verdict.holds = false;
        result.verdict.witness = MakeWitness(mu, nu, x, f.name, gap);
      }
    }
  }
  return result;
}

Thm4Result Thm4Check(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values) {
  Thm4Result result;
  result.nondegenerate = !IsZeroOneValued(mu);
  std::vector<double> grid;
  for (double v : values) {
    if (v >= 0.0 && f.domain.Contains(v)) grid.push_back(v);
  }
  result.concave_on_nonneg = CheckConcave(f.f, grid).holds;
  const std::vector<RandomVariable> xs = TwoPointGrid(mu.n(), grid);
  result.verdict = JensenHolds(mu, nu, f, xs);
  result.verdict.id = TheoremId::kTheorem4;
  result.consistent = result.nondegenerate
                          ? result.verdict.holds == result.concave_on_nonneg
                          : result.verdict.holds;
  return result;
}

TheoremSelection ParseTheoremSelection(std::string_view text) {
  if (text == "all") return TheoremSelection::kAll;
  if (text == "lemma") return TheoremSelection::kLemma;
  if (text == "1") return TheoremSelection::kTheorem1;
  if (text == "2") return TheoremSelection::kTheorem2;
  if (text == "3") return TheoremSelection::kTheorem3;
  if (text == "4") return TheoremSelection::kTheorem4;
  throw Error(ErrorCode::kParseError,
              "theorem must be one of all, lemma, 1, 2, 3, 4; got '" + std::string(text) + "'");
}

int Report::Unexpected() const {
  int total = 0;
  for (const TheoremTally& t : tallies) total += t.unexpected;
  return total;
}

namespace {

// Sorted pair indices: all of them, or `budget` distinct ones chosen by
// Floyd's algorithm.
std::vector<std::uint64_t> SelectPairs(std::uint64_t total, std::size_t budget,
                                       std::uint64_t seed) {
  std::vector<std::uint64_t> picked;
  if (budget == 0 || total <= budget) {
    picked.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) picked[i] = i;
    return picked;
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - budget; j < total; ++j) {
    const std::uint64_t t = rng.Index(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

class Sweep {
 public:
  Sweep(const ReportOptions& options, Report& report)
      : options_(options),
        report_(report),
        values_(ValueGrid()),
        two_point_(TwoPointGrid(options.n, values_)),
        concave_(ConcaveGallery()),
        convex_(ConvexGallery()),
        zero_one_(ZeroOneGallery()),
        nonneg_(NonnegativeGallery()) {}

  bool Wants(TheoremSelection s) const {
    return options_.theorem == TheoremSelection::kAll || options_.theorem == s;
  }

  void Run(const Capacity& mu, const Capacity& nu, std::uint64_t pair_index) {
    const bool dominance = DominatesDual(mu, nu).holds;
    const bool zero_one = IsZeroOneValued(mu) && IsZeroOneValued(nu);
    const bool coexistence = FindCoexistenceSet(mu, nu).has_value();
    report_.dominance_pairs += dominance;
    report_.zero_one_pairs += zero_one;
    report_.coexistence_pairs += coexistence;

    if (Wants(TheoremSelection::kLemma)) Lemma(mu, nu, pair_index);
    if (Wants(TheoremSelection::kTheorem1)) Theorem1(mu, nu, dominance);
    if (Wants(TheoremSelection::kTheorem2) && zero_one) Theorem2(mu, nu);
    if (Wants(TheoremSelection::kTheorem3) && dominance && coexistence) Theorem3(mu, nu);
    if (Wants(TheoremSelection::kTheorem4)) Theorem4(mu, nu);
  }

 private:
  TheoremTally& Tally(TheoremId id) { return report_.tallies[static_cast<int>(id)]; }

  void Emit(TheoremId id, bool expected, const Witness& witness) {
    TheoremTally& t = Tally(id);
    if (expected) {
      ++t.expected_violations;
    } else {
      ++t.unexpected;
    }
    report_.entries.push_back(ReportEntry{id, expected, witness});
  }

  void Anomaly(TheoremId id, const Capacity& mu, const Capacity& nu, std::string what) {
    ++Tally(id).unexpected;
    report_.anomalies.push_back(fmt::format("{}: mu = {}, nu = {}: {}", TheoremName(id),
                                            FormatVector(mu.table()),
                                            FormatVector(nu.table()), what));
  }

  void Lemma(const Capacity& mu, const Capacity& nu, std::uint64_t pair_index) {
    for (const Verdict& v :
         CheckLemma(mu, nu, options_.lemma_samples, options_.seed + pair_index)) {
      TheoremTally& t = Tally(v.id);
      ++t.pairs;
      t.checks += v.checked;
      if (!v.holds) {
        // Lemma witnesses are identity gaps, not Jensen gaps.
        ++t.unexpected;
        report_.anomalies.push_back(fmt::format(
            "{}: mu = {}, nu = {}, X = {}, {}: gap {}", TheoremName(v.id),
            FormatVector(v.witness->mu), FormatVector(v.witness->nu),
            FormatVector(v.witness->x), v.witness->function, v.witness->gap));
      }
    }
  }

  void Theorem1(const Capacity& mu, const Capacity& nu, bool dominance) {
    TheoremTally& t = Tally(TheoremId::kTheorem1);
    ++t.pairs;
    if (dominance) {
      for (const ProbeFunction& f : concave_) {
        const Verdict v = JensenHolds(mu, nu, f, two_point_);
        t.checks += v.checked;
        if (!v.holds) Emit(TheoremId::kTheorem1, false, *v.witness);
      }
      return;
    }
    ++t.checks;
    const double dominance_gap = DominatesDual(mu, nu).worst_gap;
    const std::optional<Witness> w = JensenCounterexample(mu, nu);
    if (w && std::abs(w->gap - dominance_gap) <= kStructuralTol && w->gap > kViolationTol) {
      Emit(TheoremId::kTheorem1, true, *w);
    } else {
      Anomaly(TheoremId::kTheorem1, mu, nu,
              fmt::format("counterexample gap does not match dominance gap {}", dominance_gap));
    }
  }

  void Theorem2(const Capacity& mu, const Capacity& nu) {
    TheoremTally& t = Tally(TheoremId::kTheorem2);
    ++t.pairs;
    for (const ProbeFunction& f : zero_one_) {
      const Thm2Result r = Thm2Check(mu, nu, f, values_);
      t.checks += r.verdict.checked;
      if (!r.identity_holds) {
        Anomaly(TheoremId::kTheorem2, mu, nu,
                fmt::format("{}: C(f(X)) != f(a_X) + f(b_X), error {}", f.name,
                            r.identity_max_error));
      }
      if (!r.consistent) {
        if (r.verdict.witness) {
          Emit(TheoremId::kTheorem2, false, *r.verdict.witness);
        } else {
          Anomaly(TheoremId::kTheorem2, mu, nu,
                  fmt::format("{}: no violation although f is not weakly superadditive",
                              f.name));
        }
      } else if (r.verdict.witness) {
        Emit(TheoremId::kTheorem2, true, *r.verdict.witness);
      }
    }
  }

  void Theorem3(const Capacity& mu, const Capacity& nu) {
    TheoremTally& t = Tally(TheoremId::kTheorem3);
    ++t.pairs;
    for (const ProbeFunction& f : concave_) {
      const Thm3Result r = Thm3Probe(mu, nu, f, values_);
      t.checks += r.verdict.checked;
      if (!r.verdict.holds) Emit(TheoremId::kTheorem3, false, *r.verdict.witness);
    }
    for (const ProbeFunction& f : convex_) {
      const Thm3Result r = Thm3Probe(mu, nu, f, values_);
      t.checks += r.verdict.checked;
      if (r.verdict.holds) {
        Anomaly(TheoremId::kTheorem3, mu, nu,
                fmt::format("{}: convex f passed every two-point check", f.name));
      } else {
        Emit(TheoremId::kTheorem3, true, *r.verdict.witness);
      }
    }
  }

  void Theorem4(const Capacity& mu, const Capacity& nu) {
    TheoremTally& t = Tally(TheoremId::kTheorem4);
    ++t.pairs;
    for (const ProbeFunction& f : nonneg_) {
      const Thm4Result r = Thm4Check(mu, nu, f, values_);
      t.checks += r.verdict.checked;
      if (r.consistent) {
        if (r.verdict.witness) Emit(TheoremId::kTheorem4, true, *r.verdict.witness);
      } else if (r.verdict.witness) {
        Emit(TheoremId::kTheorem4, false, *r.verdict.witness);
      } else {
        Anomaly(TheoremId::kTheorem4, mu, nu,
                fmt::format("{}: no violation although f is not concave on [0, inf)", f.name));
      }
    }
  }

  const ReportOptions& options_;
  Report& report_;
  std::vector<double> values_;
  std::vector<RandomVariable> two_point_;
  std::vector<ProbeFunction> concave_;
  std::vector<ProbeFunction> convex_;
  std::vector<ProbeFunction> zero_one_;
  std::vector<ProbeFunction> nonneg_;
};

}  // namespace

Report RunFullReport(const ReportOptions& options) {
  const CapacityEnumerator enumerator(options.n, options.levels);
  const std::vector<Capacity> capacities = enumerator.All();
  Report report;
  report.options = options;
  report.capacities = capacities.size();
  report.total_pairs = capacities.size() * capacities.size();
  report.tallies.assign(kTheoremCount, TheoremTally{});

  const std::vector<std::uint64_t> pairs =
      SelectPairs(report.total_pairs, options.max_pairs, options.seed);
  report.swept_pairs = pairs.size();
  Sweep sweep(options, report);
  for (std::uint64_t index : pairs) {
    sweep.Run(capacities[index / capacities.size()], capacities[index % capacities.size()],
              index);
  }
  return report;
}

std::string FormatSummary(const Report& report) {
  std::string out = fmt::format(
      "n={} levels={} seed={} capacities={} pairs={}/{}\n"
      "dominance={} zero-one={} coexistence={}\n",
      report.options.n, FormatVector(report.options.levels), report.options.seed,
      report.capacities, report.swept_pairs, report.total_pairs, report.dominance_pairs,
      report.zero_one_pairs, report.coexistence_pairs);
  for (int i = 0; i < static_cast<int>(report.tallies.size()); ++i) {
    const TheoremTally& t = report.tallies[i];
    if (t.pairs == 0) continue;
    out += fmt::format("{:<10} pairs={} checks={} expected_violations={} unexpected={}\n",
                       TheoremName(static_cast<TheoremId>(i)), t.pairs, t.checks,
                       t.expected_violations, t.unexpected);
  }
  out += fmt::format("unexpected={}\n", report.Unexpected());
  return out;
}

}  // namespace choquet
