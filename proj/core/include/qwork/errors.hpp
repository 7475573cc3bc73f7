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

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qwork {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotHermitian : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct NotDensityMatrix : Error {
  using Error::Error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct TailTooHeavy : Error {
  using Error::Error;
};

struct PoleHit : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct OnPeak : Error {
  using Error::Error;
};

struct QuadratureFailure : Error {
  using Error::Error;
};

struct DiagonalityViolation : Error {
  using Error::Error;
};

// Non-fatal contract violations (e.g. a caller probing the commuting
// shortcut with non-commuting Hamiltonians) go to stderr rather than
// throwing, so the failure mode itself stays observable.
inline void warn(const std::string& msg) {
  std::fprintf(stderr, "qwork: warning: %s\n", msg.c_str());
}

}  // namespace qwork
