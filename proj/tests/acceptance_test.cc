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

// Acceptance suite: one line per criterion, then a gtest verdict for each.

#include <gtest/gtest.h>

#include <iostream>

#include "pcone/verification.h"

namespace pcone::verification {
namespace {

class AcceptanceTest : public ::testing::TestWithParam<int> {};

TEST_P(AcceptanceTest, Criterion) {
  const CriterionResult r = RunCriterion(GetParam(), Config{});
  std::cout << FormatLine(r) << std::endl;
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_LT(r.seconds, r.time_limit_seconds);
}

INSTANTIATE_TEST_SUITE_P(All, AcceptanceTest, ::testing::Range(1, kCriterionCount + 1),
                         [](const ::testing::TestParamInfo<int>& info) {
                           return "C" + std::to_string(info.param);
                         });

}  // namespace
}  // namespace pcone::verification
