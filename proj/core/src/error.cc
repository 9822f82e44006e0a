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

#include "choquet/error.h"

#include <string>

namespace choquet {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kNotAdditive: return "NotAdditive";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kBadPsi: return "BadPsi";
    case ErrorCode::kEmptyCoalition: return "EmptyCoalition";
    case ErrorCode::kBadMass: return "BadMass";
    case ErrorCode::kMonotonicityFailure: return "MonotonicityFailure";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNotInRange: return "NotInRange";
    case ErrorCode::kNonDifferentiable: return "NonDifferentiable";
    case ErrorCode::kZeroDerivative: return "ZeroDerivative";
    case ErrorCode::kNotZeroOneValued: return "NotZeroOneValued";
    case ErrorCode::kOutOfClass: return "OutOfClass";
    case ErrorCode::kZeroOneCapacity: return "ZeroOneCapacity";
    case ErrorCode::kHypothesisFailure: return "HypothesisFailure";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace choquet
