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

#ifndef CHOQUET_TOLERANCE_H_
#define CHOQUET_TOLERANCE_H_

namespace choquet {

// Normalization, duality, additivity and capacity equality.
inline constexpr double kStructuralTol = 1e-12;

// Comparisons between quantities that went through integration or
// inversion (premiums, Jensen gaps, C4 identity).
inline constexpr double kDerivedTol = 1e-9;

}  // namespace choquet

#endif  // CHOQUET_TOLERANCE_H_
