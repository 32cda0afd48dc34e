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

#ifndef PCONE_MANIFOLD_H_
#define PCONE_MANIFOLD_H_

#include <vector>

#include "pcone/cone.h"
#include "pcone/exponent.h"
#include "pcone/linear_map.h"
#include "pcone/types.h"

namespace pcone {

// The boundary M_p = {(||x||_p, x) : x != 0} of K_p^{n+1} seen as the graph
// of f_p = ||.||_p over R^n \ {0}. Tangent spaces and normals need a
// differentiable exponent (finite p > 1); Lift and boundary maps accept any.
class GraphChart {
 public:
  // Throws kInvalidArgument for n < 1.
  GraphChart(Exponent exponent, int n);

  Exponent exponent() const { return exponent_; }
  int n() const { return n_; }

  double Height(const Vec& x) const;
  // x -> (f_p(x), x)
  ConePoint Lift(const Vec& x) const;

 private:
  Exponent exponent_;
  int n_;
};

struct TangentBasis {
  ConePoint base_point;
  // (n+1) x n; column i is (d f_p / d x_i, e_i).
  Matrix vectors;
};

// Throws kZeroVector for x = 0 and kUnsupportedExponent for p in {1, inf}.
TangentBasis ComputeTangentBasis(const GraphChart& chart, const Vec& x);

// For n-1 vectors in R^n (the columns of `vectors`, n x (n-1)), the unique
// Lambda with <Lambda, y> = det[x^1 ... x^{n-1} y] for all y. Computed by
// cofactor expansion along the last column; zero iff the inputs are
// linearly dependent.
Vec LambdaVector(const Matrix& vectors);

// Unit normal to M_p at (f_p(x), x), built as Lambda of the tangent basis and
// oriented with a positive t component.
Vec GaussNormal(const GraphChart& chart, const Vec& x);

// Last n coordinates of A (f_from(x), x). Throws kNotOnTargetGraph when the
// image's t component differs from the target norm of its tail by more than
// tol * (1 + ||image||_2), and kZeroVector for x = 0.
Vec BoundaryMap(const LinearMap& a, const GraphChart& from, const GraphChart& to,
                const Vec& x, double tol = 1e-8);

// Indices i (0-based) with |x_i| <= tol: the strata X_i of the locus where
// the p-norm is not C^2 for p in (1, 2). Throws kZeroVector for x = 0.
std::vector<int> LocusMembership(const Vec& x, double tol = 1e-12);

}  // namespace pcone

#endif  // PCONE_MANIFOLD_H_
