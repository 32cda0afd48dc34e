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

#ifndef PCONE_NELDER_MEAD_H_
#define PCONE_NELDER_MEAD_H_

#include <functional>

#include "pcone/types.h"

namespace pcone {

struct NelderMeadOptions {
  double initial_step = 0.1;
  int max_evaluations = 1000;
  // Stop as soon as a value at or below this is seen.
  double target = 0.0;
  // A collapsed simplex (diameter below this, relative) is rebuilt around the
  // best vertex with a smaller step while budget remains.
  double collapse_tolerance = 1e-12;
};

struct NelderMeadResult {
  Vec x;
  double value = 0.0;
  int evaluations = 0;
};

// Derivative-free simplex search with dimension-adaptive coefficients
// (reflection 1, expansion 1 + 2/d, contraction 3/4 - 1/(2d),
// shrink 1 - 1/d).
NelderMeadResult NelderMead(const std::function<double(const Vec&)>& f,
                            const Vec& start, const NelderMeadOptions& options);

}  // namespace pcone

#endif  // PCONE_NELDER_MEAD_H_
