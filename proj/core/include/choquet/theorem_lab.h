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

// Exhaustive and randomized checks of the integral's lemma and the Jensen
// theorems: capacity enumeration on level grids, two-point X grids, function
// galleries, counterexample construction and a deterministic sweep report.

#ifndef CHOQUET_THEOREM_LAB_H_
#define CHOQUET_THEOREM_LAB_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/capacity.h"
#include "choquet/integral.h"
#include "choquet/utility.h"

namespace choquet {

inline constexpr double kViolationTol = 1e-9;

// Every monotone normalized table on n in {1, 2, 3} elements whose values lie
// in a level grid, each exactly once, in lexicographic order of the table.
class CapacityEnumerator {
 public:
  // Levels must be strictly increasing, start at 0 and end at 1. Throws
  // kTooLarge for n > 3 and kInvalidArgument otherwise.
  CapacityEnumerator(int n, std::vector<double> levels);

  static std::vector<double> DefaultLevels() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

  void ForEach(const std::function<void(const Capacity&)>& visit) const;
  std::vector<Capacity> All() const;
  std::size_t Count() const;

  int n() const { return n_; }
  const std::vector<double>& levels() const { return levels_; }

 private:
  int n_;
  std::vector<double> levels_;
};

enum class TheoremId {
  kLemmaC1,
  kLemmaC2,
  kLemmaC3,
  kLemmaC4,
  kTheorem1,
  kTheorem2,
  kTheorem3,
  kTheorem4,
};
const char* TheoremName(TheoremId id);

// An increasing function probed by the Jensen checks. The name is either a
// utility specifier (see UtilityFunction::Parse) or "x+<shift>".
struct ProbeFunction {
  std::string name;
  std::function<double(double)> f;
  Domain domain;

  static ProbeFunction FromUtility(const UtilityFunction& u);
  static ProbeFunction Affine(double shift);
  // Inverse of `name`; throws kParseError.
  static ProbeFunction FromName(std::string_view name);
};

struct Witness {
  std::vector<double> mu;
  std::vector<double> nu;
  std::vector<double> x;
  std::string function;
  double gap = 0.0;
};

struct Verdict {
  TheoremId id = TheoremId::kTheorem1;
  bool holds = true;
  int checked = 0;
  std::optional<Witness> witness;
};

// C(f(X)) - f(C(X)); positive values violate the Jensen inequality.
double JensenGap(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                 const RandomVariable& x);

// Recomputes a Jensen witness from scratch. Throws kParseError for an
// unknown function name.
double ReevaluateWitness(const Witness& witness);

enum class Shape { kConcave, kConvex, kAny };

// Piecewise-linear increasing function through 0 on [-5, 5] with random
// knots; slopes decreasing, increasing or unordered by shape.
ProbeFunction RandomMonotoneTable(Shape shape, std::uint64_t seed);

// Concave increasing with f(0) >= 0.
std::vector<ProbeFunction> ConcaveGallery();
// Strictly convex increasing with f(0) = 0.
std::vector<ProbeFunction> ConvexGallery();
// Increasing, continuous, f(0) = 0; both weakly superadditive and not.
std::vector<ProbeFunction> ZeroOneGallery();
// Increasing with f(0) = 0; concave and convex on [0, inf).
std::vector<ProbeFunction> NonnegativeGallery();

// `count` evenly spaced values on [lo, hi]; the default is 41 points on
// [-5, 5].
std::vector<double> ValueGrid(double lo = -5.0, double hi = 5.0, int count = 41);

// X = b on B and a on the complement for every nonempty proper B with
// B < complement(B) as bitmasks and every ordered pair (b, a) of values.
std::vector<RandomVariable> TwoPointGrid(int n, std::span<const double> values);

// Randomized checks of C1 (strict vs non-strict tails agree), C2
// (monotonicity), C3 (homogeneity with the swapped order for b <= 0) and C4
// (translation identity) with X uniform on [-10, 10]. Returns four verdicts.
std::vector<Verdict> CheckLemma(const Capacity& mu, const Capacity& nu, int sample_count,
                                std::uint64_t seed);

// Jensen inequality C(f(X)) <= f(C(X)) + 1e-9 over the given X, skipping X
// whose values or integral leave the domain of f.
Verdict JensenHolds(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                    std::span<const RandomVariable> xs);

// X = -1 on the complement of the dominance witness A, f(x) = x + 2. The
// returned gap equals mu(A) - conj(nu)(A). Empty when mu <= conj(nu).
std::optional<Witness> JensenCounterexample(const Capacity& mu, const Capacity& nu);

struct Thm2Result {
  Verdict verdict;
  std::optional<Subset> coexistence;
  bool weakly_superadditive = true;
  // C(f(X)) = f(a_X) + f(b_X) within 1e-12 (1 + |value|) on every X.
  bool identity_holds = true;
  double identity_max_error = 0.0;
  // Verdict matches superadditivity with a coexistence set, and holds
  // unconditionally without one.
  bool consistent = true;
};
// Coexistence here means mu(B) = 1 and nu(B^c) = 1. Superadditivity is
// checked on the value grid. Throws kNotZeroOneValued.
Thm2Result Thm2Check(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values);

struct Thm3Result {
  Verdict verdict;
  Subset set = 0;
  double p = 0.0;
  double q = 0.0;
  // Jensen on X = a + (b - a) 1_B split by the sign pattern of a < b.
  bool nonnegative_holds = true;
  bool nonpositive_holds = true;
  bool straddling_holds = true;
  // Midpoint concavity of f on the value grid.
  bool grid_concave = true;
};
// Requires mu <= conj(nu) and a set B with mu(B) > 0 and nu(B^c) > 0, else
// throws kHypothesisFailure.
Thm3Result Thm3Probe(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values);

struct Thm4Result {
  Verdict verdict;
  // Some B has 0 < mu(B) < 1.
  bool nondegenerate = false;
  bool concave_on_nonneg = true;
  bool consistent = true;
};
// Jensen over nonnegative two-point X built from the nonnegative entries of
// values.
Thm4Result Thm4Check(const Capacity& mu, const Capacity& nu, const ProbeFunction& f,
                     std::span<const double> values);

enum class TheoremSelection { kAll, kLemma, kTheorem1, kTheorem2, kTheorem3, kTheorem4 };
// "all", "lemma", "1", "2", "3", "4".
TheoremSelection ParseTheoremSelection(std::string_view text);

struct ReportOptions {
  int n = 2;
  std::vector<double> levels = CapacityEnumerator::DefaultLevels();
  std::uint64_t seed = 42;
  TheoremSelection theorem = TheoremSelection::kAll;
  // Pairs beyond this budget are subsampled with the seed; 0 means all.
  std::size_t max_pairs = 0;
  int lemma_samples = 20;
};

struct ReportEntry {
  TheoremId id;
  // True when the theorem predicts this violation (failed hypothesis or a
  // contrapositive probe).
  bool expected = false;
  Witness witness;
};

struct TheoremTally {
  int pairs = 0;
  int checks = 0;
  int expected_violations = 0;
  int unexpected = 0;
};

struct Report {
  ReportOptions options;
  std::size_t capacities = 0;
  std::size_t total_pairs = 0;
  std::size_t swept_pairs = 0;
  int dominance_pairs = 0;
  int zero_one_pairs = 0;
  int coexistence_pairs = 0;
  // Indexed by TheoremId.
  std::vector<TheoremTally> tallies;
  std::vector<ReportEntry> entries;
  // One line per unexpected verdict that has no witness to show.
  std::vector<std::string> anomalies;

  int Unexpected() const;
};

// Deterministic given the options. Throws kTooLarge for n > 3.
Report RunFullReport(const ReportOptions& options);

// One line per theorem plus the classification counts.
std::string FormatSummary(const Report& report);

}  // namespace choquet

#endif  // CHOQUET_THEOREM_LAB_H_
