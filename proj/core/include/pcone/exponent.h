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

#ifndef PCONE_EXPONENT_H_
#define PCONE_EXPONENT_H_

#include <string>
#include <string_view>

namespace pcone {

// A norm exponent p in [1, inf]. Infinity is its own variant and is never
// approximated by a large finite value.
class Exponent {
 public:
  // Throws kInvalidArgument unless 1 <= p < inf.
  static Exponent Finite(double p);
  static Exponent Infinity() { return Exponent(true, 0.0, 1.0); }
  // Accepts a decimal literal or the token "inf".
  static Exponent Parse(std::string_view token);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Finite value; +inf for the infinite exponent.
  double value() const;

  bool IsOne() const { return !infinite_ && value_ == 1.0; }
  bool IsTwo() const { return !infinite_ && value_ == 2.0; }
  bool IsPolyhedral() const { return infinite_ || value_ == 1.0; }
  // Finite p > 1: the range where the norm is differentiable off the origin.
  bool IsSmooth() const { return !infinite_ && value_ > 1.0; }

  // q with 1/p + 1/q = 1. Each exponent remembers its partner, so
  // conjugating twice returns the original value exactly.
  Exponent Conjugate() const;

  // "inf" or the shortest round-trip decimal.
  std::string ToString() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Exponent(bool infinite, double value, double conjugate)
      : infinite_(infinite), value_(value), conjugate_(conjugate) {}

  bool infinite_;
  double value_;
  double conjugate_;  // finite partner value; unused when the partner is inf
};

inline Exponent Conjugate(const Exponent& e) { return e.Conjugate(); }

}  // namespace pcone

#endif  // PCONE_EXPONENT_H_
