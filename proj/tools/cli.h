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

// The choquet command-line tool as a library entry point, so that tests can
// drive it without spawning processes.

#ifndef CHOQUET_TOOLS_CLI_H_
#define CHOQUET_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace choquet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

// Parses and runs one subcommand. Returns 0 on success, 1 on a validation
// or usage error and 2 when `verify --expect-clean` finds an unexpected
// verdict.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace choquet::cli

#endif  // CHOQUET_TOOLS_CLI_H_
