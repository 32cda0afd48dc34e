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

#ifndef PCONE_CONE_H_
#define PCONE_CONE_H_

#include <cstdint>
#include <vector>

#include "pcone/exponent.h"
#include "pcone/types.h"

namespace pcone {

// K_p^{n+1} = {(t, x) in R x R^n : t >= ||x||_p}. `ambient_dim` is n + 1.
struct ConeSpec {
  Exponent exponent;
  int ambient_dim;

  // Throws kInvalidArgument when ambient_dim < 2.
  static ConeSpec Make(Exponent exponent, int ambient_dim);

  int n() const { return ambient_dim - 1; }

  friend bool operator==(const ConeSpec& a, const ConeSpec& b) {
    return a.exponent == b.exponent && a.ambient_dim == b.ambient_dim;
  }
};

struct ConePoint {
  double t = 0.0;
  Vec x;

  // [t, x_1, ..., x_n]
  Vec Stacked() const;
  static ConePoint FromStacked(const Vec& v);

  int ambient_dim() const { return static_cast<int>(x.size()) + 1; }
  double EuclideanNorm() const;
};

enum class Membership { kInterior, kBoundary, kOutside };

const char* MembershipName(Membership m);

// Scale-aware membership band: 1e-9 * (1 + ||z||_2).
double DefaultTolerance(const ConePoint& z);

// Interior if t - ||x||_p > tol, Boundary if |t - ||x||_p| <= tol,
// Outside otherwise.
Membership Contains(const ConeSpec& spec, const ConePoint& z, double tol);

// Dual under the Euclidean inner product: the conjugate exponent.
ConeSpec Dual(const ConeSpec& spec);

struct Ray {
  // Unit Euclidean length, t > 0.
  ConePoint direction;
};

// Extreme rays of the polyhedral members K_1 (2n rays through (1, +-e_i))
// and K_inf (2^n rays through (1, +-1, ..., +-1)). Ordered index-major with
// +1 before -1. Throws kNotPolyhedral for 1 < p < inf.
std::vector<Ray> ExtremeRays(const ConeSpec& spec);

// Boundary points (||x||_p, x) with x uniform on the Euclidean unit sphere.
// With `smooth_stratum` set, directions with a coordinate below 1e-12 in
// magnitude are redrawn. Deterministic per seed.
std::vector<ConePoint> SampleBoundary(const ConeSpec& spec, int count,
                                      std::uint64_t seed,
                                      bool smooth_stratum = false);

struct Projection {
  ConePoint pk;          // Euclidean projection onto K_p
  ConePoint pkstar_neg;  // z - pk, the projection onto -K_q
  int iterations = 0;    // outer root-finding iterations (0 for closed forms)
};

// Moreau decomposition of z with respect to K_p. For 1 < p < inf the scalar
// optimality condition is solved by safeguarded Newton with bisection
// fallback to `tol` (relative to ||z||_2); p in {1, inf} use exact
// sorting-based formulas. Throws kConvergenceFailure if the root finder
// exhausts its iteration budget.
Projection Project(const ConeSpec& spec, const ConePoint& z, double tol = 1e-12);

}  // namespace pcone

#endif  // PCONE_CONE_H_
