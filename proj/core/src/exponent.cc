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

#include "pcone/exponent.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <system_error>

#include "pcone/error.h"

namespace pcone {

Exponent Exponent::Finite(double p) {
  if (!std::isfinite(p) || !(p >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exponent must satisfy 1 <= p < inf, got " + std::to_string(p));
  }
  if (p == 1.0) return Exponent(false, 1.0, 0.0);
  if (p == 2.0) return Exponent(false, 2.0, 2.0);
  return Exponent(false, p, p / (p - 1.0));
}

Exponent Exponent::Parse(std::string_view token) {
  if (token == "inf" || token == "Inf" || token == "INF" ||
      token == "infinity") {
    return Infinity();
  }
  double p = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot parse exponent '" + std::string(token) + "'");
  }
  return Finite(p);
}

double Exponent::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

Exponent Exponent::Conjugate() const {
  if (infinite_) return Finite(1.0);
  if (conjugate_ == 0.0) return Infinity();
  return Exponent(false, conjugate_, value_);
}

std::string Exponent::ToString() const {
  if (infinite_) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, ptr);
}

}  // namespace pcone
