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

// Reruns the default self-dual search over several seeds and prints the
// smallest violation per cone. The frozen floors in verification.cc are half
// of these minima.

#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <limits>

#include "pcone/cone.h"
#include "pcone/duality.h"
#include "pcone/exponent.h"

int main() {
  const pcone::Exponent exponents[] = {
      pcone::Exponent::Finite(1.0), pcone::Exponent::Finite(1.5),
      pcone::Exponent::Finite(3.0), pcone::Exponent::Infinity()};
  const std::uint64_t seeds[] = {42, 7, 1234};
  std::printf("p\tdim\tmin_violation\tfloor\n");
  for (int dim : {3, 4}) {
    for (const pcone::Exponent& p : exponents) {
      double lowest = std::numeric_limits<double>::infinity();
      for (std::uint64_t seed : seeds) {
        pcone::SearchOptions options;
        options.seed = seed;
        const auto report =
            pcone::SelfDualSearch(pcone::ConeSpec::Make(p, dim), options);
        lowest = std::min(lowest, report.best_violation);
      }
      std::printf("%s\t%d\t%.6g\t%.3g\n", p.ToString().c_str(), dim, lowest,
                  0.5 * lowest);
      std::fflush(stdout);
    }
  }
  return 0;
}
