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

#include "pcone/cone.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pcone/error.h"
#include "pcone/pnorm.h"

namespace pcone {

ConeSpec ConeSpec::Make(Exponent exponent, int ambient_dim) {
  if (ambient_dim < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cone ambient dimension must be >= 2, got " +
                    std::to_string(ambient_dim));
  }
  return ConeSpec{exponent, ambient_dim};
}

Vec ConePoint::Stacked() const {
  Vec v(x.size() + 1);
  v[0] = t;
  v.tail(x.size()) = x;
  return v;
}

ConePoint ConePoint::FromStacked(const Vec& v) {
  if (v.size() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "empty cone point");
  }
  return ConePoint{v[0], v.tail(v.size() - 1)};
}

double ConePoint::EuclideanNorm() const {
  return std::sqrt(t * t + x.squaredNorm());
}

const char* MembershipName(Membership m) {
  switch (m) {
    case Membership::kInterior:
      return "Interior";
    case Membership::kBoundary:
      return "Boundary";
    case Membership::kOutside:
      return "Outside";
  }
  return "Unknown";
}

double DefaultTolerance(const ConePoint& z) {
  return 1e-9 * (1.0 + z.EuclideanNorm());
}

Membership Contains(const ConeSpec& spec, const ConePoint& z, double tol) {
  if (z.ambient_dim() != spec.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "point/cone dimension mismatch");
  }
  const double gap = z.t - Norm(z.x, spec.exponent);
  if (gap > tol) return Membership::kInterior;
  if (std::abs(gap) <= tol) return Membership::kBoundary;
  return Membership::kOutside;
}

ConeSpec Dual(const ConeSpec& spec) {
  return ConeSpec{spec.exponent.Conjugate(), spec.ambient_dim};
}

std::vector<Ray> ExtremeRays(const ConeSpec& spec) {
  const int n = spec.n();
  std::vector<Ray> rays;
  if (spec.exponent.IsOne()) {
    const double scale = 1.0 / std::sqrt(2.0);
    rays.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      for (double sigma : {1.0, -1.0}) {
        ConePoint d{scale, Vec::Zero(n)};
        d.x[i] = sigma * scale;
        rays.push_back({std::move(d)});
      }
    }
    return rays;
  }
  if (spec.exponent.is_infinite()) {
    if (n >= 31) {
      throw Error(ErrorCode::kInvalidArgument, "too many extreme rays to list");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n + 1));
    const std::uint64_t count = std::uint64_t{1} << n;
    rays.reserve(count);
    // Bit k of `pattern` (counting from the most significant of n bits) picks
    // the sign of x_k, so +1 precedes -1 lexicographically.
    for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
      ConePoint d{scale, Vec(n)};
      for (int k = 0; k < n; ++k) {
        const bool negative = (pattern >> (n - 1 - k)) & 1u;
        d.x[k] = negative ? -scale : scale;
      }
      rays.push_back({std::move(d)});
    }
    return rays;
  }
  throw Error(ErrorCode::kNotPolyhedral,
              "extreme rays are only listed for p in {1, inf}, got p = " +
                  spec.exponent.ToString());
}

std::vector<ConePoint> SampleBoundary(const ConeSpec& spec, int count,
                                      std::uint64_t seed, bool smooth_stratum) {
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = spec.n();
  std::vector<ConePoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = gauss(rng);
    const double len = x.norm();
    if (len == 0.0) continue;
    x /= len;
    if (smooth_stratum && (x.array().abs() < 1e-12).any()) continue;
    out.push_back({Norm(x, spec.exponent), std::move(x)});
  }
  return out;
}

namespace {

constexpr int kMaxIterations = 200;

// Sorted magnitudes (descending) and their prefix sums.
struct SortedMagnitudes {
  std::vector<double> values;
  std::vector<double> prefix;  // prefix[k] = sum of the k largest

  explicit SortedMagnitudes(const Vec& x) : values(x.size()) {
    for (Eigen::Index i = 0; i < x.size(); ++i) values[i] = std::abs(x[i]);
    std::sort(values.begin(), values.end(), std::greater<>());
    prefix.assign(values.size() + 1, 0.0);
    for (std::size_t k = 0; k < values.size(); ++k) {
      prefix[k + 1] = prefix[k] + values[k];
    }
  }
  double at(std::size_t k) const { return k < values.size() ? values[k] : 0.0; }
};

// z outside K_1 and outside -K_inf: soft-threshold x at theta with
// sum_i (|x_i| - theta)_+ = t + theta.
ConePoint ProjectOntoK1(const ConePoint& z) {
  const SortedMagnitudes mags(z.x);
  const std::size_t n = mags.values.size();
  double theta = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    theta = (mags.prefix[k] - z.t) / static_cast<double>(k + 1);
    if (theta >= mags.at(k) && theta <= mags.at(k - 1)) break;
  }
  theta = std::max(theta, 0.0);
  ConePoint pk{0.0, Vec(z.x.size())};
  for (Eigen::Index i = 0; i < z.x.size(); ++i) {
    const double shrunk = std::max(std::abs(z.x[i]) - theta, 0.0);
    pk.x[i] = std::copysign(shrunk, z.x[i]);
  }
  pk.t = pk.x.cwiseAbs().sum();
  return pk;
}

// z outside K_inf and outside -K_1: clip x at mu with
// sum_i (|x_i| - mu)_+ = mu - t.
ConePoint ProjectOntoKInf(const ConePoint& z) {
  const SortedMagnitudes mags(z.x);
  const std::size_t n = mags.values.size();
  double mu = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    mu = (mags.prefix[k] + z.t) / static_cast<double>(k + 1);
    if (mu >= mags.at(k) && mu <= mags.at(k - 1)) break;
  }
  mu = std::max(mu, 0.0);
  ConePoint pk{mu, Vec(z.x.size())};
  for (Eigen::Index i = 0; i < z.x.size(); ++i) {
    pk.x[i] = std::copysign(std::min(std::abs(z.x[i]), mu), z.x[i]);
  }
  return pk;
}

// Root a in [0, b] of a + c a^(p-1) = b for b > 0, c > 0, p > 1.
double SolveShrinkage(double b, double c, double p) {
  if (b == 0.0) return 0.0;
  if (p == 2.0) return b / (1.0 + c);
  if (p > 2.0) {
    // Convex increasing in a; Newton from an upper bound is monotone.
    double a = std::min(b, std::pow(b / c, 1.0 / (p - 1.0)));
    for (int it = 0; it < 100; ++it) {
      const double ap = std::pow(a, p - 2.0);
      const double f = a + c * ap * a - b;
      const double df = 1.0 + c * (p - 1.0) * ap;
      const double next = a - f / df;
      if (!(next < a) || next <= 0.0) {
        if (next <= 0.0) a *= 0.5;
        else break;
      } else {
        const bool done = a - next <= 1e-16 * a;
        a = next;
        if (done) break;
      }
    }
    return a;
  }
  // 1 < p < 2: in u = a^(p-1) the equation u^r + c u = b with r = 1/(p-1) > 1
  // is convex, so Newton from an upper bound is again monotone.
  const double r = 1.0 / (p - 1.0);
  double u = std::min(b / c, std::pow(b, p - 1.0));
  for (int it = 0; it < 100; ++it) {
    const double ur1 = std::pow(u, r - 1.0);
    const double f = ur1 * u + c * u - b;
    const double df = r * ur1 + c;
    const double next = u - f / df;
    if (!(next < u)) break;
    if (next <= 0.0) {
      u *= 0.5;
      continue;
    }
    const bool done = u - next <= 1e-16 * u;
    u = next;
    if (done) break;
  }
  return std::pow(u, r);
}

struct ShrinkageState {
  Vec a;           // magnitudes of the projected x
  double s = 0.0;  // ||a||_p
  double residual = 0.0;
  double slope = 0.0;  // d residual / d log c
};

ShrinkageState EvaluateShrinkage(const Vec& b, double t, double c, double p) {
  ShrinkageState st;
  st.a.resize(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i) st.a[i] = SolveShrinkage(b[i], c, p);
  st.s = Norm(st.a, Exponent::Finite(p));
  const double sp1 = std::pow(st.s, p - 1.0);
  st.residual = st.s - c * sp1 - t;
  if (st.s == 0.0) {
    st.slope = -1.0;
    return st;
  }
  // da_i/dc = -a_i / (a_i^(2-p) + c (p-1)), stable for either side of p = 2.
  double ds = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    const double ai = st.a[i];
    if (ai == 0.0) continue;
    const double dai = -ai / (std::pow(ai, 2.0 - p) + c * (p - 1.0));
    ds += std::pow(ai / st.s, p - 1.0) * dai;
  }
  const double dres = ds * (1.0 - c * (p - 1.0) * std::pow(st.s, p - 2.0)) - sp1;
  st.slope = c * dres;
  return st;
}

// z outside K_p and outside -K_q, ||z||_2 = 1, 1 < p < inf.
ConePoint ProjectSmooth(const ConePoint& z, double p, double tol, int* iterations) {
  const Vec b = z.x.cwiseAbs();
  const Exponent e = Exponent::Finite(p);
  // Within tol of either cone the multiplier runs off to 0 or inf, where the
  // residual is pure rounding; the nearby boundary point is tol-accurate.
  if (Norm(b, e) - z.t <= tol) {
    *iterations = 0;
    return ConePoint{Norm(z.x, e), z.x};
  }
  if (Norm(b, e.Conjugate()) + z.t <= tol) {
    *iterations = 0;
    return ConePoint{0.0, Vec::Zero(z.x.size())};
  }
  // Residual is strictly decreasing in c; bracket a sign change in log c.
  double lo = 0.0, hi = 0.0;
  ShrinkageState st = EvaluateShrinkage(b, z.t, 1.0, p);
  int expansions = 0;
  if (st.residual > 0.0) {
    lo = 0.0;
    hi = 2.0;
    for (;; hi += 2.0) {
      if (++expansions > kMaxIterations) break;
      if (EvaluateShrinkage(b, z.t, std::exp(hi), p).residual <= 0.0) break;
      lo = hi;
    }
  } else {
    hi = 0.0;
    lo = -2.0;
    for (;; lo -= 2.0) {
      if (++expansions > kMaxIterations) break;
      if (EvaluateShrinkage(b, z.t, std::exp(lo), p).residual > 0.0) break;
      hi = lo;
    }
  }
  if (expansions > kMaxIterations) {
    throw Error(ErrorCode::kConvergenceFailure,
                "could not bracket the projection multiplier after " +
                    std::to_string(expansions) + " expansions");
  }

  double tau = 0.5 * (lo + hi);
  st = EvaluateShrinkage(b, z.t, std::exp(tau), p);
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    if (std::abs(st.residual) <= tol) break;
    if (st.residual > 0.0) lo = tau;
    else hi = tau;
    double next = tau;
    if (st.slope < 0.0) next = tau - st.residual / st.slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == tau) break;
    tau = next;
    st = EvaluateShrinkage(b, z.t, std::exp(tau), p);
  }
  if (it == kMaxIterations && std::abs(st.residual) > tol) {
    throw Error(ErrorCode::kConvergenceFailure,
                "projection multiplier did not converge: residual " +
                    std::to_string(st.residual) + " after " +
                    std::to_string(it) + " iterations");
  }
  *iterations = it + 1;
  ConePoint pk{st.s, Vec(z.x.size())};
  for (Eigen::Index i = 0; i < z.x.size(); ++i) {
    pk.x[i] = std::copysign(st.a[i], z.x[i]);
  }
  return pk;
}

}  // namespace

Projection Project(const ConeSpec& spec, const ConePoint& z, double tol) {
  if (z.ambient_dim() != spec.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "point/cone dimension mismatch");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "projection tolerance must be > 0");
  }
  const Exponent p = spec.exponent;
  const Exponent q = p.Conjugate();
  Projection out;
  const double scale = z.EuclideanNorm();
  if (scale == 0.0 || Norm(z.x, p) <= z.t) {
    out.pk = z;
  } else if (Norm(z.x, q) <= -z.t) {
    out.pk = ConePoint{0.0, Vec::Zero(z.x.size())};
  } else {
    // The projection is positively homogeneous; solve at unit scale.
    const ConePoint unit{z.t / scale, z.x / scale};
    ConePoint pk;
    if (p.IsOne()) {
      pk = ProjectOntoK1(unit);
    } else if (p.is_infinite()) {
      pk = ProjectOntoKInf(unit);
    } else {
      pk = ProjectSmooth(unit, p.value(), tol, &out.iterations);
    }
    out.pk = ConePoint{pk.t * scale, pk.x * scale};
  }
  out.pkstar_neg = ConePoint{z.t - out.pk.t, z.x - out.pk.x};
  return out;
}

}  // namespace pcone
