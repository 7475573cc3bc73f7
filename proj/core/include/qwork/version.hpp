// Copyright 2026 The qwork developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qwork {

inline constexpr const char* kVersion = "0.1.0";

// Library-wide default for the thermal-population mass allowed to fall
// outside the Fock-space truncation. Closed-form comparisons carry this
// value as an explicit error budget.
inline constexpr double kDefaultEpsTail = 1e-12;

}  // namespace qwork
