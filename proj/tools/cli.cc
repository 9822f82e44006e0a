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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "choquet/capacity.h"
#include "choquet/error.h"
#include "choquet/integral.h"
#include "choquet/io.h"
#include "choquet/premium.h"
#include "choquet/theorem_lab.h"
#include "choquet/utility.h"
#include "choquet/weighting.h"

namespace choquet::cli {
namespace {

constexpr const char* kSchemaHelp = R"(Input documents (JSON):
  capacity  {"n": 2, "labels": ["a","b"] (optional),
             "table": {"{}": 0, "{a}": 0.3, "{b}": 0.5, "{a,b}": 1}}
            table keys are "{...}" subsets (labels or 1-based indices) or
            decimal bitmasks; an array in bitmask order is also accepted.
            Constructors: {"n": 2, "construct": {"kind": K, ...}} with K one of
            probability{weights}, distortion{weights,g}, hurwicz{family,theta},
            possibility{psi}, necessity{psi}, unanimity{coalition},
            belief{mass}, plausibility{mass}, credibility{v}, dual{of}.
  scenario  {"w": 1.0, "X": [4,-2], "mu_file": "mu.json",
             "nu_file": "nu.json" (optional, default conj(mu)),
             "utility": "exp:1"}; "mu"/"nu" may hold inline capacities.
  utility   exp:A | power:A,B | log:A | powerexpo:B,C | linear | negsqrt |
            kink | convexp:A | quad:K | table:x/y,x/y,...
  weighting kt:G | ge:D,G | prelec:D,G | identity | table:p/g,...
Numbers are printed with 17 significant digits.)";

std::string Num(double v) { return fmt::format("{:.17g}", v); }

std::string Join(std::span<const double> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += Num(values[i]);
  }
  return s + "]";
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  file << text;
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

struct CheckCapacityArgs {
  std::string file;
  std::string write;
  bool dual = false;
};

int CheckCapacity(const CheckCapacityArgs& a, std::ostream& out) {
  const Capacity loaded = LoadCapacity(a.file);
  const Capacity mu = a.dual ? Dual(loaded) : loaded;
  fmt::print(out, "valid capacity on {} elements{}\n", mu.n(), a.dual ? " (dual)" : "");
  fmt::print(out, "additive: {}\n", YesNo(IsAdditive(mu)));
  fmt::print(out, "zero-one valued: {}\n", YesNo(IsZeroOneValued(mu)));
  const SuperadditivityResult super = CheckSuperadditive(mu);
  fmt::print(out, "superadditive: {}\n", YesNo(super.holds));
  const DominanceResult self = DominatesDual(mu, mu);
  fmt::print(out, "mu <= conj(mu): {}\n", YesNo(self.holds));
  const std::string doc = CapacityToJson(mu).dump(2) + "\n";
  if (!a.write.empty()) {
    WriteText(a.write, doc);
    fmt::print(out, "wrote {}\n", a.write);
  } else if (a.dual) {
    out << doc;
  }
  return kExitOk;
}

struct IntegrateArgs {
  std::string mu;
  std::string nu;
  std::string x;
  std::string mode = "gen";
  std::optional<double> oracle_step;
};

int Integrate(const IntegrateArgs& a, std::ostream& out) {
  const Capacity mu = LoadCapacity(a.mu);
  const RandomVariable x = ParseRandomVariable(a.x);
  if (x.size() != mu.n()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("X has {} values but {} has {} elements", x.size(), a.mu, mu.n()));
  }
  std::optional<Capacity> nu;
  if (a.mode == "gen") {
    if (a.nu.empty()) throw Error(ErrorCode::kInvalidArgument, "--mode gen needs --nu");
    nu = LoadCapacity(a.nu);
  } else if (!a.nu.empty()) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("--mode {} takes no --nu", a.mode));
  } else {
    nu = a.mode == "choquet" ? Dual(mu) : mu;
  }
  if (!mu.ground().CompatibleWith(nu->ground())) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("{} has {} elements, {} has {}", a.mu, mu.n(), a.nu, nu->n()));
  }
  const double value = GenChoquet(mu, *nu, x);
  out << Num(value) << "\n";
  if (a.oracle_step) {
    const double oracle = RiemannOracle(mu, *nu, x, *a.oracle_step);
    fmt::print(out, "oracle {} delta {}\n", Num(oracle), Num(oracle - value));
  }
  return kExitOk;
}

struct CompareArgs {
  std::string u;
  std::string v;
  std::string mu;
  std::string nu;
  int samples = 1000;
  std::uint64_t seed = 42;
};

void PrintComparison(const AgentComparison& c, std::uint64_t seed, std::ostream& out) {
  fmt::print(out, "seed {}\n", seed);
  fmt::print(out, "hypotheses_hold {}\n", c.hypotheses_hold);
  fmt::print(out, "premium_order_holds {}\n", c.premium_order_holds);
  fmt::print(out, "r_order_holds {}\n", c.r_order_holds);
  fmt::print(out, "g_concave {}\n", c.g_concave);
  fmt::print(out, "agree {}\n", c.Agree());
  fmt::print(out, "scenarios checked {} skipped {}\n", c.checked, c.skipped);
  if (c.premium_witness) {
    const PremiumWitness& w = *c.premium_witness;
    fmt::print(out, "premium_witness w={} X={} premium_u={} premium_v={}\n", Num(w.wealth),
               Join(w.outcome), Num(w.premium), Num(w.reference));
  }
  if (c.r_witness) fmt::print(out, "r_witness x={}\n", Num(*c.r_witness));
  if (c.g_witness) fmt::print(out, "g_witness x={}\n", Num(*c.g_witness));
  if (!c.hypotheses_hold) {
    fmt::print(out,
               "warning: HypothesisFailure: capacities fail mu <= conj(nu) or lack a set B "
               "with mu(B) > 0 and nu(B^c) > 0; agreement is not asserted\n");
  }
}

AgentComparison RunComparison(const UtilityFunction& u, const UtilityFunction& v,
                              const Capacity& mu, const Capacity& nu, int samples,
                              std::uint64_t seed) {
  SamplerOptions options;
  options.n = mu.n();
  ScenarioSampler sampler(options, seed);
  return CompareAgents(u, v, mu, nu, sampler, samples);
}

int Compare(const CompareArgs& a, std::ostream& out) {
  const UtilityFunction u = UtilityFunction::Parse(a.u);
  const UtilityFunction v = UtilityFunction::Parse(a.v);
  const Capacity mu = LoadCapacity(a.mu);
  const Capacity nu = a.nu.empty() ? Dual(mu) : LoadCapacity(a.nu);
  if (!mu.ground().CompatibleWith(nu.ground())) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("{} has {} elements, {} has {}", a.mu, mu.n(), a.nu, nu.n()));
  }
  PrintComparison(RunComparison(u, v, mu, nu, a.samples, a.seed), a.seed, out);
  return kExitOk;
}

struct PremiumArgs {
  std::string scenario;
  std::string compare;
  int samples = 1000;
  std::uint64_t seed = 42;
};

int PremiumCommand(const PremiumArgs& a, std::ostream& out) {
  const Scenario s = LoadScenario(a.scenario);
  fmt::print(out, "premium {}\n", Num(Premium(s)));
  fmt::print(out, "risk_neutral_premium {}\n", Num(RiskNeutralPremium(s)));
  try {
    fmt::print(out, "approx_premium {}\n", Num(ApproxPremium(s)));
  } catch (const Error& e) {
    fmt::print(out, "approx_premium unavailable ({})\n", e.what());
  }
  if (!a.compare.empty()) {
    const UtilityFunction v = UtilityFunction::Parse(a.compare);
    PrintComparison(RunComparison(s.u, v, s.mu, s.nu, a.samples, a.seed), a.seed, out);
  }
  return kExitOk;
}

struct FiguresArgs {
  std::string family = "all";
  std::string g;
  std::string h;
  int grid = kDefaultWeightingGrid;
  std::string out_dir = ".";
  bool allow_out_of_range = false;
};

struct FigureSpec {
  std::string family;
  std::string file;
  std::string g;
  std::string h;
};

std::string Qualify(const std::string& family, const std::string& spec) {
  return spec.find(':') == std::string::npos && spec != "identity" ? family + ":" + spec
                                                                   : spec;
}

int Figures(const FiguresArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<FigureSpec> specs = {{"kt", "figure1.csv", "kt:0.61", "kt:0.69"},
                                   {"ge", "figure2.csv", "ge:0.65,0.60", "ge:0.84,0.65"},
                                   {"prelec", "figure3.csv", "prelec:1,0.74", "prelec:1,0.74"}};
  if (a.family != "all") {
    std::erase_if(specs, [&](const FigureSpec& s) { return s.family != a.family; });
    if (!a.g.empty()) specs[0].g = Qualify(a.family, a.g);
    if (!a.h.empty()) specs[0].h = Qualify(a.family, a.h);
  } else if (!a.g.empty() || !a.h.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--g and --h need a single --family");
  }
  // Parse everything before writing anything.
  std::vector<std::pair<WeightingFunction, WeightingFunction>> functions;
  for (const FigureSpec& s : specs) {
    functions.emplace_back(WeightingFunction::Parse(s.g, a.allow_out_of_range),
                           WeightingFunction::Parse(s.h, a.allow_out_of_range));
  }
  std::filesystem::create_directories(a.out_dir);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& [g, h] = functions[i];
    for (const WeightingFunction* w : {&g, &h}) {
      if (w->out_of_range()) {
        fmt::print(err, "warning: {} is outside the recommended parameter range\n",
                   w->ToString());
      }
    }
    const std::vector<FigureRow> rows = FigureData(g, h, a.grid);
    std::ostringstream csv;
    WriteFigureCsv(csv, rows);
    const std::filesystem::path path = std::filesystem::path(a.out_dir) / specs[i].file;
    WriteText(path, csv.str());
    const WeightingDominance d = CheckWeightingDominance(g, h, a.grid);
    fmt::print(out, "{} g={} h={} rows={} dominance={} max_gap={} argmax={} violations={}\n",
               path.string(), g.ToString(), h.ToString(), rows.size(),
               d.holds ? "holds" : "fails", Num(d.max_gap), Num(d.argmax), d.violations);
  }
  return kExitOk;
}

struct VerifyArgs {
  int n = 2;
  std::string levels = "0,0.25,0.5,0.75,1";
  std::uint64_t seed = 42;
  std::string theorem = "all";
  std::string out_file;
  std::size_t max_pairs = 1000;
  int lemma_samples = 20;
  bool expect_clean = false;
};

int Verify(const VerifyArgs& a, std::ostream& out) {
  ReportOptions options;
  options.n = a.n;
  options.levels.clear();
  std::istringstream stream(a.levels);
  for (std::string item; std::getline(stream, item, ',');) {
    try {
      std::size_t used = 0;
      options.levels.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "--levels entry '" + item + "' is not a number");
    }
  }
  options.seed = a.seed;
  options.theorem = ParseTheoremSelection(a.theorem);
  options.max_pairs = a.max_pairs;
  options.lemma_samples = a.lemma_samples;
  const Report report = RunFullReport(options);
  out << FormatSummary(report);
  for (const std::string& line : report.anomalies) out << "anomaly: " << line << "\n";
  if (!a.out_file.empty()) {
    WriteText(a.out_file, ReportToJson(report).dump(2) + "\n");
    fmt::print(out, "wrote {}\n", a.out_file);
  }
  return a.expect_clean && report.Unexpected() > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Choquet integrals, Jensen-inequality checks and premiums.",
               "choquet"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1, 1);

  CheckCapacityArgs check_args;
  CLI::App* check = app.add_subcommand("check-capacity", "Validate a capacity document");
  check->add_option("file", check_args.file, "Capacity JSON")->required();
  check->add_option("--write", check_args.write, "Write the canonical document here");
  check->add_flag("--dual", check_args.dual, "Operate on the dual capacity");

  IntegrateArgs integrate_args;
  CLI::App* integrate = app.add_subcommand("integrate", "Evaluate C_{mu,nu}(X)");
  integrate->add_option("--mu", integrate_args.mu, "Capacity for gains")->required();
  integrate->add_option("--nu", integrate_args.nu, "Capacity for losses (mode gen)");
  integrate->add_option("--x", integrate_args.x, "X as a JSON array, e.g. \"[4,-2]\"")
      ->required();
  integrate->add_option("--mode", integrate_args.mode, "gen, choquet or sipos")
      ->check(CLI::IsMember({"gen", "choquet", "sipos"}));
  integrate->add_option("--oracle-step", integrate_args.oracle_step,
                        "Also run the midpoint oracle with this step")
      ->check(CLI::PositiveNumber);

  PremiumArgs premium_args;
  CLI::App* premium = app.add_subcommand("premium", "Premiums for a scenario document");
  premium->add_option("scenario", premium_args.scenario, "Scenario JSON")->required();
  premium->add_option("--compare", premium_args.compare,
                      "Second utility; prints the risk-aversion comparison flags");
  premium->add_option("--samples", premium_args.samples, "Sampled scenarios for --compare")
      ->check(CLI::NonNegativeNumber);
  premium->add_option("--seed", premium_args.seed, "Sampler seed");

  CompareArgs compare_args;
  CLI::App* compare = app.add_subcommand("compare", "Compare the risk aversion of u and v");
  compare->add_option("--u", compare_args.u, "Utility u")->required();
  compare->add_option("--v", compare_args.v, "Utility v")->required();
  compare->add_option("--mu", compare_args.mu, "Capacity for gains")->required();
  compare->add_option("--nu", compare_args.nu, "Capacity for losses (default conj(mu))");
  compare->add_option("--samples", compare_args.samples, "Sampled scenarios")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--seed", compare_args.seed, "Sampler seed");

  FiguresArgs figures_args;
  CLI::App* figures = app.add_subcommand("figures", "Weighting-function figure data");
  // --h names the loss weighting here, so help is long-form only.
  figures->set_help_flag("--help", "Print this help message and exit");
  figures->add_option("--family", figures_args.family, "kt, ge, prelec or all")
      ->check(CLI::IsMember({"kt", "ge", "prelec", "all"}));
  figures->add_option("--g", figures_args.g, "Gain weighting, e.g. 0.61 or kt:0.61");
  figures->add_option("--h", figures_args.h, "Loss weighting, e.g. 0.69 or kt:0.69");
  figures->add_option("--grid", figures_args.grid, "Grid points on [0, 1]")
      ->check(CLI::Range(2, 10000000));
  figures->add_option("--out-dir", figures_args.out_dir, "Directory for figureK.csv");
  figures->add_flag("--allow-out-of-range", figures_args.allow_out_of_range,
                    "Admit KT gamma outside (0.28, 1]");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Sweep enumerated capacity pairs");
  verify->add_option("--n", verify_args.n, "Ground-set size (2 or 3)")
      ->check(CLI::Range(1, 3));
  verify->add_option("--levels", verify_args.levels, "Comma-separated level grid");
  verify->add_option("--seed", verify_args.seed, "Seed for sampling and subsampling");
  verify->add_option("--theorem", verify_args.theorem, "all, lemma, 1, 2, 3 or 4")
      ->check(CLI::IsMember({"all", "lemma", "1", "2", "3", "4"}));
  verify->add_option("--out", verify_args.out_file, "Write the JSON report here");
  verify->add_option("--max-pairs", verify_args.max_pairs,
                     "Pair budget; larger sweeps are subsampled (0 = all)");
  verify->add_option("--lemma-samples", verify_args.lemma_samples,
                     "Random X per pair for the lemma checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--expect-clean", verify_args.expect_clean,
                   "Exit 2 when any verdict contradicts a theorem");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return CheckCapacity(check_args, out);
    if (integrate->parsed()) return Integrate(integrate_args, out);
    if (premium->parsed()) return PremiumCommand(premium_args, out);
    if (compare->parsed()) return Compare(compare_args, out);
    if (figures->parsed()) return Figures(figures_args, out, err);
    if (verify->parsed()) return Verify(verify_args, out);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitError;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitError;
  }
  return kExitError;
}

}  // namespace choquet::cli
