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

#include "pcone/error.h"

#include <string>

namespace pcone {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kZeroVector:
      return "ZeroVector";
    case ErrorCode::kUnsupportedExponent:
      return "UnsupportedExponent";
    case ErrorCode::kNotTwiceDifferentiable:
      return "NotTwiceDifferentiable";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kNotPolyhedral:
      return "NotPolyhedral";
    case ErrorCode::kConvergenceFailure:
      return "ConvergenceFailure";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kSingularMatrix:
      return "SingularMatrix";
    case ErrorCode::kNotInterior:
      return "NotInterior";
    case ErrorCode::kNotOnTargetGraph:
      return "NotOnTargetGraph";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace pcone
