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

#ifndef PCONE_PNORM_H_
#define PCONE_PNORM_H_

#include <span>
#include <vector>

#include "pcone/exponent.h"
#include "pcone/types.h"

namespace pcone {

// (sum |x_i|^p)^(1/p), or max |x_i| for p = inf. The largest magnitude is
// factored out before powering so large p does not overflow.
double Norm(const Eigen::Ref<const Vec>& x, Exponent e);

// Gradient of the p-norm at x != 0 for finite p > 1. The result has unit
// norm in the conjugate exponent.
//
// Throws kZeroVector for x = 0 and kUnsupportedExponent for p in {1, inf}.
Vec Gradient(const Vec& x, Exponent e);

// Hessian of the p-norm. Defined for p >= 2 at any x != 0, and for
// p in (1, 2) only where every coordinate is nonzero (kNotTwiceDifferentiable
// otherwise). The result is symmetric PSD with x in its null space.
Matrix Hessian(const Vec& x, Exponent e);

enum class Smoothness { kTwiceSmooth, kNotTwiceSmooth };

const char* SmoothnessName(Smoothness s);

// Whether the p-norm is C^2 in a neighbourhood of x (finite p > 1).
Smoothness ClassifyC2(const Vec& x, Exponent e);

struct ProbePoint {
  double step;
  double quotient;
};

// Difference quotients (d_i N(x + h e_j) - d_i N(x)) / h of the i-th partial
// derivative along e_j, at a point with x_i = 0. Indices are 0-based. Steps
// must be positive and strictly decreasing, at least four of them.
//
// For p in (1, 2) and j = i the quotients blow up like h^(p-2).
std::vector<ProbePoint> C2DivergenceProbe(const Vec& x, Exponent e, int i,
                                          int j, std::span<const double> steps);

// Ordinary least-squares slope of log|quotient| against log(step). Points
// with a zero quotient carry no scale information and are skipped; if fewer
// than two remain the quotients are identically zero and the slope is 0.
double LogLogSlope(std::span<const ProbePoint> points);

// count steps spaced geometrically from first down to last.
std::vector<double> GeometricSteps(double first, double last, int count);

}  // namespace pcone

#endif  // PCONE_PNORM_H_
