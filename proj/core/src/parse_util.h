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
#ifndef CHOQUET_SRC_PARSE_UTIL_H_
#define CHOQUET_SRC_PARSE_UTIL_H_

#include <charconv>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "choquet/error.h"

namespace choquet::internal {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline double ParseNumber(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<double> ParseNumberList(std::string_view text) {
  std::vector<double> values;
  if (Trim(text).empty()) return values;
  for (std::string_view part : Split(text, ',')) values.push_back(ParseNumber(part));
  return values;
}

// "kind:rest" -> {kind, rest}; rest is empty when there is no colon.
inline std::pair<std::string_view, std::string_view> SplitKind(std::string_view spec) {
  spec = Trim(spec);
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return {spec, {}};
  return {Trim(spec.substr(0, colon)), spec.substr(colon + 1)};
}

// "x0/y0,x1/y1,..." knot lists.
inline std::vector<std::pair<double, double>> ParseKnots(std::string_view text) {
  std::vector<std::pair<double, double>> knots;
  for (std::string_view part : Split(text, ',')) {
    const auto xy = Split(part, '/');
    if (xy.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "knot must be written x/y: '" + std::string(part) + "'");
    }
    knots.emplace_back(ParseNumber(xy[0]), ParseNumber(xy[1]));
  }
  return knots;
}

}  // namespace choquet::internal

#endif  // CHOQUET_SRC_PARSE_UTIL_H_
