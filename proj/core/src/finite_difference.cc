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

#include "pcone/finite_difference.h"

#include <algorithm>

namespace pcone::fd {

double GradientStep(const Vec& x) {
  const double scale = x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
  return 1e-6 * std::max(1.0, scale);
}

Vec CentralGradient(const ScalarFn& f, const Vec& x, double h) {
  Vec g(x.size());
  Vec probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fwd = f(probe);
    probe[i] = x[i] - h;
    const double bwd = f(probe);
    probe[i] = x[i];
    g[i] = (fwd - bwd) / (2.0 * h);
  }
  return g;
}

Matrix CentralJacobian(const VectorFn& f, const Vec& x, double h) {
  const Vec f0 = f(x);
  Matrix jac(f0.size(), x.size());
  Vec probe = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    probe[j] = x[j] + h;
    const Vec fwd = f(probe);
    probe[j] = x[j] - h;
    const Vec bwd = f(probe);
    probe[j] = x[j];
    jac.col(j) = (fwd - bwd) / (2.0 * h);
  }
  return jac;
}

Matrix CentralHessian(const ScalarFn& f, const Vec& x, double h) {
  const Eigen::Index n = x.size();
  Matrix hess(n, n);
  Vec probe = x;
  const double f0 = f(x);
  for (Eigen::Index i = 0; i < n; ++i) {
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      auto eval = [&](double si, double sj) {
        probe[i] = x[i] + si * h;
        probe[j] = x[j] + sj * h;
        const double v = f(probe);
        probe[i] = x[i];
        probe[j] = x[j];
        return v;
      };
      const double v =
          (eval(1, 1) - eval(1, -1) - eval(-1, 1) + eval(-1, -1)) / (4.0 * h * h);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return hess;
}

}  // namespace pcone::fd
