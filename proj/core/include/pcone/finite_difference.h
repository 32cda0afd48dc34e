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

#ifndef PCONE_FINITE_DIFFERENCE_H_
#define PCONE_FINITE_DIFFERENCE_H_

#include <functional>

#include "pcone/types.h"

// Central-difference derivatives of black-box functions. These are the
// oracles the analytic p-norm derivatives are checked against and must not
// call into them.
namespace pcone::fd {

using ScalarFn = std::function<double(const Vec&)>;
using VectorFn = std::function<Vec(const Vec&)>;

// Default gradient step: 1e-6 * max(1, ||x||_inf).
double GradientStep(const Vec& x);
inline constexpr double kHessianStep = 1e-5;

Vec CentralGradient(const ScalarFn& f, const Vec& x, double h);

// Jacobian of a vector field; column j is the derivative along e_j.
Matrix CentralJacobian(const VectorFn& f, const Vec& x, double h);

// Hessian from second central differences of a scalar function.
Matrix CentralHessian(const ScalarFn& f, const Vec& x, double h);

}  // namespace pcone::fd

#endif  // PCONE_FINITE_DIFFERENCE_H_
