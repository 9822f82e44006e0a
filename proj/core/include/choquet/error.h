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

#ifndef CHOQUET_ERROR_H_
#define CHOQUET_ERROR_H_

#include <stdexcept>
#include <string>

namespace choquet {

enum class ErrorCode {
  kInvalidArgument,
  kNotNormalized,
  kNotMonotone,
  kBadWeights,
  kNotAdditive,
  kEmptyFamily,
  kBadPsi,
  kEmptyCoalition,
  kBadMass,
  kMonotonicityFailure,
  kGroundSetMismatch,
  kDomainError,
  kNotInRange,
  kNonDifferentiable,
  kZeroDerivative,
  kNotZeroOneValued,
  kOutOfClass,
  kZeroOneCapacity,
  kHypothesisFailure,
  kTooLarge,
  kParseError,
};

// Stable name used in CLI messages and JSON reports, e.g. "NotMonotone".
const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  // The message without the code-name prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace choquet

#endif  // CHOQUET_ERROR_H_
