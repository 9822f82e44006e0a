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

// JSON documents for capacities, random variables, scenarios and theorem
// reports. The schemas are described in docs/schemas.md. Every parse error
// is reported as kParseError with a one-line message naming the field.

#ifndef CHOQUET_IO_H_
#define CHOQUET_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "choquet/capacity.h"
#include "choquet/integral.h"
#include "choquet/premium.h"
#include "choquet/theorem_lab.h"

namespace choquet {

// Reads the whole file and parses it as JSON. Throws kParseError.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);

// Either an explicit table {"n", "labels"?, "table"} or a constructor
// {"n"?, "labels"?, "construct": {"kind", ...}}.
Capacity CapacityFromJson(const nlohmann::json& doc);
// {"n", "labels"?, "table": {"{}": 0, "{1}": ..., ...}} in bitmask order.
nlohmann::ordered_json CapacityToJson(const Capacity& mu);
Capacity LoadCapacity(const std::filesystem::path& path);

// "[4,-2]" or a JSON array of numbers.
RandomVariable ParseRandomVariable(std::string_view text);
RandomVariable RandomVariableFromJson(const nlohmann::json& doc);

// {"w", "X", "mu_file" | "mu", "nu_file" | "nu", "utility"}; file names are
// resolved relative to base_dir. A missing nu defaults to conj(mu).
Scenario ScenarioFromJson(const nlohmann::json& doc, const std::filesystem::path& base_dir);
Scenario LoadScenario(const std::filesystem::path& path);

nlohmann::json WitnessToJson(const Witness& witness);
nlohmann::json PremiumWitnessToJson(const PremiumWitness& witness);
nlohmann::json ReportToJson(const Report& report);

}  // namespace choquet

#endif  // CHOQUET_IO_H_
