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

#ifndef CHOQUET_TESTS_TEST_UTIL_H_
#define CHOQUET_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "choquet/capacity.h"
#include "choquet/error.h"

namespace choquet::testing {

// Runs `statement` and returns the code of the choquet::Error it throws.
template <typename F>
::testing::AssertionResult ThrowsCode(F&& statement, ErrorCode expected) {
  try {
    statement();
  } catch (const Error& e) {
    if (e.code() == expected) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure()
           << "threw " << ErrorCodeName(e.code()) << " (" << e.what() << "), expected "
           << ErrorCodeName(expected);
  }
  return ::testing::AssertionFailure() << "did not throw " << ErrorCodeName(expected);
}

#define EXPECT_THROWS_CODE(statement, code) \
  EXPECT_TRUE(::choquet::testing::ThrowsCode([&] { (void)(statement); }, code))

inline Capacity Table(std::vector<double> table) {
  int n = 0;
  while ((std::size_t{1} << n) < table.size()) ++n;
  return Capacity::Create(GroundSet(n), std::move(table));
}

// mu = {0, 0.3, 0.5, 1} on two elements, used by most worked examples.
inline Capacity WorkedMu() { return Table({0.0, 0.3, 0.5, 1.0}); }

inline std::string DataPath(const std::string& name) {
  return std::string(CHOQUET_TEST_DATA_DIR) + "/" + name;
}

}  // namespace choquet::testing

#endif  // CHOQUET_TESTS_TEST_UTIL_H_
