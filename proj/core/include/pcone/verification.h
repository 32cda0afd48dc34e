// Copyright 2026 The pcone Authors
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

#ifndef PCONE_VERIFICATION_H_
#define PCONE_VERIFICATION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pcone/exponent.h"

// The acceptance suite: twelve numerical checks of the p-cone results, each
// with a fixed tolerance and wall-clock limit. Shared by the acceptance test
// binary and `pcone verify-all`.
namespace pcone::verification {

struct Config {
  std::uint64_t seed = 42;
  // Multiplies every numeric tolerance; values far below 1 are a negative
  // control that must produce failures.
  double tolerance_scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit_seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

// Runs criterion `id` (1-based). Throws pcone::Error for an unknown id.
CriterionResult RunCriterion(int id, const Config& config);
std::vector<CriterionResult> RunAll(const Config& config);

// One line: "[PASS] 03 four-candidate eigenvalues (0.001s / 1s): detail".
std::string FormatLine(const CriterionResult& result);

// Frozen lower bounds on the best self-duality violation for p != 2, from
// 50-restart calibration runs (see tools/calibrate_floors.cc).
double SelfDualFloor(Exponent p, int ambient_dim);

}  // namespace pcone::verification

#endif  // PCONE_VERIFICATION_H_
