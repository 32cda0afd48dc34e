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

#include "pcone/verification.h"

#include <gtest/gtest.h>

#include <limits>

#include "test_util.h"

namespace pcone::verification {
namespace {

TEST(VerificationTest, FormatLine) {
  CriterionResult r;
  r.id = 3;
  r.name = "four-candidate eigenvalues";
  r.passed = true;
  r.detail = "ok";
  r.seconds = 0.0012;
  r.time_limit_seconds = 1;
  EXPECT_EQ(FormatLine(r), "[PASS] 03 four-candidate eigenvalues (0.001s / 1s): ok");
  r.passed = false;
  EXPECT_EQ(FormatLine(r).substr(0, 9), "[FAIL] 03");
}

TEST(VerificationTest, UnknownCriterion) {
  EXPECT_PCONE_ERROR(RunCriterion(0, Config{}), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(RunCriterion(kCriterionCount + 1, Config{}), ErrorCode::kInvalidArgument);
}

TEST(VerificationTest, FloorsAreFrozenAndMeaningful) {
  for (double p : {1.0, 1.5, 3.0, std::numeric_limits<double>::infinity()}) {
    for (int dim : {3, 4}) EXPECT_GT(SelfDualFloor(testing::P(p), dim), 1e-7);
  }
  EXPECT_PCONE_ERROR(SelfDualFloor(testing::P(2), 3), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(SelfDualFloor(testing::P(1.5), 7), ErrorCode::kInvalidArgument);
}

TEST(VerificationTest, CorruptedToleranceFailsInAControlledWay) {
  Config config;
  config.tolerance_scale = 1e-30;
  // Exact criteria are unaffected (the eigenvalue check can land on -sqrt(2)
  // exactly); criteria measuring a nonzero rounding error must fail.
  EXPECT_TRUE(RunCriterion(1, config).passed);
  for (int id : {5, 7, 8}) {
    const CriterionResult r = RunCriterion(id, config);
    EXPECT_FALSE(r.passed) << FormatLine(r);
    EXPECT_FALSE(r.detail.empty());
  }
}

TEST(VerificationTest, FastCriteriaAreSeedRobust) {
  for (std::uint64_t seed : {7ull, 1234ull}) {
    Config config;
    config.seed = seed;
    for (int id : {1, 2, 3, 5, 6, 7, 8, 11, 12}) {
      const CriterionResult r = RunCriterion(id, config);
      EXPECT_TRUE(r.passed) << FormatLine(r);
    }
  }
}

}  // namespace
}  // namespace pcone::verification
