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

#include "choquet/io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "choquet/error.h"
#include "choquet/weighting.h"
#include "parse_util.h"

namespace choquet {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) Fail(fmt::format("missing field \"{}\"", key));
  return doc.at(key);
}

double Number(const json& value, std::string_view what) {
  if (!value.is_number()) Fail(fmt::format("\"{}\" must be a number", what));
  return value.get<double>();
}

std::vector<double> Numbers(const json& value, std::string_view what) {
  if (!value.is_array()) Fail(fmt::format("\"{}\" must be an array of numbers", what));
  std::vector<double> out;
  for (const json& v : value) out.push_back(Number(v, what));
  return out;
}

std::string String(const json& value, std::string_view what) {
  if (!value.is_string()) Fail(fmt::format("\"{}\" must be a string", what));
  return value.get<std::string>();
}

GroundSet GroundFromJson(const json& doc, std::optional<int> implied_n) {
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array()) Fail("\"labels\" must be an array of strings");
    for (const json& s : l) labels.push_back(String(s, "labels"));
  }
  int n = 0;
  if (doc.contains("n")) {
    const json& v = doc.at("n");
    if (!v.is_number_integer()) Fail("\"n\" must be an integer");
    n = v.get<int>();
  } else if (!labels.empty()) {
    n = static_cast<int>(labels.size());
  } else if (implied_n) {
    n = *implied_n;
  } else {
    Fail("missing field \"n\"");
  }
  try {
    return GroundSet(n, std::move(labels));
  } catch (const Error& e) {
    Fail(e.detail());
  }
}

// "{}", "{1,3}" or "{a,b}" (labels or 1-based indices), or a decimal bitmask.
Subset ParseSubsetKey(const GroundSet& ground, std::string_view key) {
  key = internal::Trim(key);
  if (key.empty()) Fail("empty subset key");
  if (key.front() != '{') {
    const double mask = internal::ParseNumber(key);
    if (mask < 0 || mask != static_cast<Subset>(mask) ||
        static_cast<Subset>(mask) > ground.full()) {
      Fail(fmt::format("subset key \"{}\" is not a bitmask below 2^{}", key, ground.size()));
    }
    return static_cast<Subset>(mask);
  }
  if (key.back() != '}') Fail(fmt::format("subset key \"{}\" lacks a closing brace", key));
  const std::string_view inner = internal::Trim(key.substr(1, key.size() - 2));
  Subset set = 0;
  if (inner.empty()) return set;
  for (std::string_view part : internal::Split(inner, ',')) {
    part = internal::Trim(part);
    int index = -1;
    for (int i = 0; i < ground.size(); ++i) {
      if (ground.Label(i) == part) index = i;
    }
    if (index < 0) {
      Fail(fmt::format("subset key \"{}\" names unknown element \"{}\"", key, part));
    }
    const Subset bit = Subset{1} << index;
    if (set & bit) Fail(fmt::format("subset key \"{}\" repeats \"{}\"", key, part));
    set |= bit;
  }
  return set;
}

// Array in bitmask order, or an object keyed by subsets covering each subset
// exactly once.
std::vector<double> SetFunctionFromJson(const json& value, const GroundSet& ground,
                                        const char* what) {
  if (value.is_array()) {
    std::vector<double> table = Numbers(value, what);
    if (table.size() != ground.subset_count()) {
      Fail(fmt::format("\"{}\" has {} entries, expected {}", what, table.size(),
                       ground.subset_count()));
    }
    return table;
  }
  if (!value.is_object()) Fail(fmt::format("\"{}\" must be an array or an object", what));
  std::vector<double> table(ground.subset_count(), 0.0);
  std::vector<bool> seen(ground.subset_count(), false);
  for (const auto& [key, v] : value.items()) {
    const Subset a = ParseSubsetKey(ground, key);
    if (seen[a]) Fail(fmt::format("\"{}\" lists {} twice", what, ground.Format(a)));
    seen[a] = true;
    table[a] = Number(v, what);
  }
  for (Subset a = 0; a < ground.subset_count(); ++a) {
    if (!seen[a]) Fail(fmt::format("\"{}\" omits {}", what, ground.Format(a)));
  }
  return table;
}

Subset CoalitionFromJson(const json& value, const GroundSet& ground) {
  if (value.is_string()) return ParseSubsetKey(ground, value.get<std::string>());
  if (!value.is_array()) Fail("\"coalition\" must be a subset string or an array");
  Subset set = 0;
  for (const json& e : value) {
    std::string key;
    if (e.is_number_integer()) {
      key = std::to_string(e.get<int>());
    } else {
      key = String(e, "coalition");
    }
    set |= ParseSubsetKey(ground, "{" + key + "}");
  }
  return set;
}

Capacity Construct(const json& doc) {
  const json& spec = Require(doc, "construct");
  const std::string kind = String(Require(spec, "kind"), "kind");
  auto with_ground = [&](Capacity c) {
    if (doc.contains("n") || doc.contains("labels")) {
      const GroundSet ground = GroundFromJson(doc, c.n());
      if (ground.size() != c.n()) {
        Fail(fmt::format("\"n\" is {} but the construction has {} elements", ground.size(),
                         c.n()));
      }
      return Capacity::Create(ground, std::vector<double>(c.table().begin(), c.table().end()));
    }
    return c;
  };
  if (kind == "probability") {
    return with_ground(FromProbability(Numbers(Require(spec, "weights"), "weights")));
  }
  if (kind == "distortion") {
    const Capacity p = FromProbability(Numbers(Require(spec, "weights"), "weights"));
    const bool allow = spec.value("allow_out_of_range", false);
    return with_ground(
        Distort(p, WeightingFunction::Parse(String(Require(spec, "g"), "g"), allow)));
  }
  if (kind == "hurwicz") {
    const json& family_doc = Require(spec, "family");
    if (!family_doc.is_array()) Fail("\"family\" must be an array of capacities");
    std::vector<Capacity> family;
    for (const json& member : family_doc) family.push_back(CapacityFromJson(member));
    return with_ground(Hurwicz(family, Number(Require(spec, "theta"), "theta")));
  }
  if (kind == "possibility") {
    return with_ground(Possibility(Numbers(Require(spec, "psi"), "psi")));
  }
  if (kind == "necessity") return with_ground(Necessity(Numbers(Require(spec, "psi"), "psi")));
  if (kind == "credibility") return with_ground(Credibility(Numbers(Require(spec, "v"), "v")));
  if (kind == "dual") return with_ground(Dual(CapacityFromJson(Require(spec, "of"))));
  const GroundSet ground = GroundFromJson(doc, std::nullopt);
  if (kind == "unanimity") {
    return Unanimity(ground, CoalitionFromJson(Require(spec, "coalition"), ground));
  }
  if (kind == "belief" || kind == "plausibility") {
    const MassFunction m =
        MassFunction::Create(ground, SetFunctionFromJson(Require(spec, "mass"), ground, "mass"));
    return kind == "belief" ? Belief(m) : Plausibility(m);
  }
  Fail(fmt::format("unknown construct kind \"{}\"", kind));
}

}  // namespace

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(fmt::format("cannot open {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    Fail(fmt::format("{}: malformed JSON ({})", path.string(), e.what()));
  }
}

Capacity CapacityFromJson(const json& doc) {
  if (!doc.is_object()) Fail("capacity document must be a JSON object");
  if (doc.contains("construct")) return Construct(doc);
  const GroundSet ground = GroundFromJson(doc, std::nullopt);
  return Capacity::Create(ground, SetFunctionFromJson(Require(doc, "table"), ground, "table"));
}

nlohmann::ordered_json CapacityToJson(const Capacity& mu) {
  nlohmann::ordered_json doc;
  doc["n"] = mu.n();
  if (mu.ground().has_labels()) doc["labels"] = mu.ground().labels();
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (Subset a = 0; a < mu.ground().subset_count(); ++a) table[mu.ground().Format(a)] = mu(a);
  doc["table"] = std::move(table);
  return doc;
}

Capacity LoadCapacity(const std::filesystem::path& path) {
  const json doc = ReadJsonFile(path);
  try {
    return CapacityFromJson(doc);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.detail()));
  }
}

RandomVariable ParseRandomVariable(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    Fail(fmt::format("X must be a JSON array of numbers, got '{}'", text));
  }
  return RandomVariableFromJson(doc);
}

RandomVariable RandomVariableFromJson(const json& doc) {
  try {
    return RandomVariable(Numbers(doc, "X"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    Fail(e.detail());
  }
}

Scenario ScenarioFromJson(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) Fail("scenario document must be a JSON object");
  auto capacity = [&](const char* file_key, const char* inline_key) -> std::optional<Capacity> {
    if (doc.contains(file_key)) {
      return LoadCapacity(base_dir / String(doc.at(file_key), file_key));
    }
    if (doc.contains(inline_key)) return CapacityFromJson(doc.at(inline_key));
    return std::nullopt;
  };
  std::optional<Capacity> mu = capacity("mu_file", "mu");
  if (!mu) Fail("scenario needs \"mu_file\" or \"mu\"");
  std::optional<Capacity> nu = capacity("nu_file", "nu");
  if (!nu) nu = Dual(*mu);
  if (!mu->ground().CompatibleWith(nu->ground())) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("mu has {} elements, nu has {}", mu->n(), nu->n()));
  }
  RandomVariable x = RandomVariableFromJson(Require(doc, "X"));
  if (x.size() != mu->n()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                fmt::format("X has {} values but the capacities have {} elements", x.size(),
                            mu->n()));
  }
  const double w = Number(Require(doc, "w"), "w");
  UtilityFunction u = UtilityFunction::Parse(String(Require(doc, "utility"), "utility"));
  return Scenario{w, std::move(x), std::move(*mu), std::move(*nu), std::move(u)};
}

Scenario LoadScenario(const std::filesystem::path& path) {
  return ScenarioFromJson(ReadJsonFile(path), path.parent_path());
}

json WitnessToJson(const Witness& witness) {
  return json{{"mu", witness.mu},
              {"nu", witness.nu},
              {"X", witness.x},
              {"f", witness.function},
              {"gap", witness.gap}};
}

json PremiumWitnessToJson(const PremiumWitness& witness) {
  return json{{"w", witness.wealth},
              {"X", witness.outcome},
              {"premium", witness.premium},
              {"reference", witness.reference},
              {"gap", witness.gap}};
}

json ReportToJson(const Report& report) {
  json tallies = json::object();
  for (std::size_t i = 0; i < report.tallies.size(); ++i) {
    const TheoremTally& t = report.tallies[i];
    if (t.pairs == 0) continue;
    tallies[TheoremName(static_cast<TheoremId>(i))] = {
        {"pairs", t.pairs},
        {"checks", t.checks},
        {"expected_violations", t.expected_violations},
        {"unexpected", t.unexpected}};
  }
  json entries = json::array();
  for (const ReportEntry& e : report.entries) {
    json entry = WitnessToJson(e.witness);
    entry["theorem"] = TheoremName(e.id);
    entry["expected"] = e.expected;
    entries.push_back(std::move(entry));
  }
  return json{{"n", report.options.n},
              {"levels", report.options.levels},
              {"seed", report.options.seed},
              {"capacities", report.capacities},
              {"total_pairs", report.total_pairs},
              {"swept_pairs", report.swept_pairs},
              {"dominance_pairs", report.dominance_pairs},
              {"zero_one_pairs", report.zero_one_pairs},
              {"coexistence_pairs", report.coexistence_pairs},
              {"tallies", tallies},
              {"unexpected", report.Unexpected()},
              {"witnesses", entries},
              {"anomalies", report.anomalies}};
}

}  // namespace choquet
