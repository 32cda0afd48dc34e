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

#include "pcone/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace pcone {

NelderMeadResult NelderMead(const std::function<double(const Vec&)>& f,
                            const Vec& start, const NelderMeadOptions& options) {
  const Eigen::Index d = start.size();
  NelderMeadResult best{start, f(start), 1};
  if (d == 0 || best.value <= options.target) return best;

  const double dd = static_cast<double>(d);
  const double expand = 1.0 + 2.0 / dd;
  const double contract = 0.75 - 0.5 / dd;
  const double shrink = d > 1 ? 1.0 - 1.0 / dd : 0.5;

  int evals = 1;
  // Once the budget is spent, pending trial points are rejected unevaluated.
  auto eval = [&](const Vec& x) {
    if (evals >= options.max_evaluations) return HUGE_VAL;
    const double v = f(x);
    ++evals;
    if (v < best.value) {
      best.value = v;
      best.x = x;
    }
    return std::isnan(v) ? HUGE_VAL : v;
  };
  auto done = [&] {
    return evals >= options.max_evaluations || best.value <= options.target;
  };

  double step = options.initial_step;
  std::vector<Vec> simplex(d + 1);
  std::vector<double> values(d + 1);
  std::vector<int> order(d + 1);

  while (!done()) {
    simplex[0] = best.x;
    values[0] = best.value;
    for (Eigen::Index k = 0; k < d && !done(); ++k) {
      simplex[k + 1] = best.x;
      simplex[k + 1][k] += step;
      values[k + 1] = eval(simplex[k + 1]);
    }
    if (done()) break;

    while (!done()) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return values[a] < values[b]; });
      const int lo = order.front();
      const int hi = order.back();
      const int second = order[d - 1];

      double diameter = 0.0;
      for (Eigen::Index k = 0; k <= d; ++k) {
        diameter = std::max(diameter, (simplex[k] - simplex[lo]).cwiseAbs().maxCoeff());
      }
      const double scale = 1.0 + simplex[lo].cwiseAbs().maxCoeff();
      if (diameter <= options.collapse_tolerance * scale) break;

      Vec centroid = Vec::Zero(d);
      for (Eigen::Index k = 0; k <= d; ++k) {
        if (k != hi) centroid += simplex[k];
      }
      centroid /= dd;

      const Vec reflected = centroid + (centroid - simplex[hi]);
      const double fr = eval(reflected);
      if (fr < values[lo]) {
        const Vec expanded = centroid + expand * (centroid - simplex[hi]);
        const double fe = eval(expanded);
        if (fe < fr) {
          simplex[hi] = expanded;
          values[hi] = fe;
        } else {
          simplex[hi] = reflected;
          values[hi] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[hi] = reflected;
        values[hi] = fr;
        continue;
      }
      const bool outside = fr < values[hi];
      const Vec contracted =
          outside ? Vec(centroid + contract * (reflected - centroid))
                  : Vec(centroid + contract * (simplex[hi] - centroid));
      const double fc = eval(contracted);
      if (fc < (outside ? fr : values[hi])) {
        simplex[hi] = contracted;
        values[hi] = fc;
        continue;
      }
      for (Eigen::Index k = 0; k <= d && !done(); ++k) {
        if (k == lo) continue;
        simplex[k] = simplex[lo] + shrink * (simplex[k] - simplex[lo]);
        values[k] = eval(simplex[k]);
      }
    }
    step *= 0.1;
    if (step < 1e-14) step = options.initial_step * 1e-3;
  }
  best.evaluations = evals;
  return best;
}

}  // namespace pcone
