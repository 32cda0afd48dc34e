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

#include "pcone/pnorm.h"

#include <cmath>
#include <string>

#include "pcone/error.h"

namespace pcone {
namespace {

void RequireNonzero(const Vec& x) {
  if (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "the p-norm derivative needs x != 0");
  }
}

void RequireSmooth(Exponent e, const char* what) {
  if (!e.IsSmooth()) {
    throw Error(ErrorCode::kUnsupportedExponent,
                std::string(what) + " is only implemented for finite p > 1, got p = " +
                    e.ToString());
  }
}

double Sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace

double Norm(const Eigen::Ref<const Vec>& x, Exponent e) {
  if (x.size() == 0) return 0.0;
  const double scale = x.cwiseAbs().maxCoeff();
  if (e.is_infinite() || scale == 0.0) return scale;
  const double p = e.value();
  if (p == 1.0) return x.cwiseAbs().sum();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double r = std::abs(x[i]) / scale;
    if (r != 0.0) sum += p == 2.0 ? r * r : std::pow(r, p);
  }
  return scale * (p == 2.0 ? std::sqrt(sum) : std::pow(sum, 1.0 / p));
}

Vec Gradient(const Vec& x, Exponent e) {
  RequireSmooth(e, "gradient");
  RequireNonzero(x);
  const double p = e.value();
  const double norm = Norm(x, e);
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    // ||x||^(1-p) |x_i|^(p-1) sign(x_i), written in scaled form.
    g[i] = Sign(x[i]) * std::pow(std::abs(x[i]) / norm, p - 1.0);
  }
  return g;
}

Matrix Hessian(const Vec& x, Exponent e) {
  RequireSmooth(e, "hessian");
  RequireNonzero(x);
  const double p = e.value();
  if (p < 2.0 && (x.array() == 0.0).any()) {
    throw Error(ErrorCode::kNotTwiceDifferentiable,
                "p in (1,2) and x has a zero coordinate");
  }
  const double norm = Norm(x, e);
  const Vec g = Gradient(x, e);
  const Eigen::Index n = x.size();
  Matrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      // (1-p) ||x||^(1-2p) |x_i x_j|^(p-1) sign(x_i) sign(x_j)
      h(i, j) = (1.0 - p) * g[i] * g[j] / norm;
      h(j, i) = h(i, j);
    }
    // + (p-1) ||x||^(1-p) |x_i|^(p-2) on the diagonal; 0^0 = 1 at p = 2.
    h(i, i) += (p - 1.0) * std::pow(std::abs(x[i]) / norm, p - 2.0) / norm;
  }
  return h;
}

const char* SmoothnessName(Smoothness s) {
  return s == Smoothness::kTwiceSmooth ? "TwiceSmooth" : "NotTwiceSmooth";
}

Smoothness ClassifyC2(const Vec& x, Exponent e) {
  RequireSmooth(e, "C2 classification");
  RequireNonzero(x);
  if (e.value() >= 2.0) return Smoothness::kTwiceSmooth;
  return (x.array() == 0.0).any() ? Smoothness::kNotTwiceSmooth
                                  : Smoothness::kTwiceSmooth;
}

std::vector<ProbePoint> C2DivergenceProbe(const Vec& x, Exponent e, int i,
                                          int j, std::span<const double> steps) {
  RequireNonzero(x);
  if (!e.IsSmooth()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "divergence probe needs finite p > 1");
  }
  if (i < 0 || j < 0 || i >= x.size() || j >= x.size()) {
    throw Error(ErrorCode::kPreconditionViolated, "probe index out of range");
  }
  if (x[i] != 0.0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "probe coordinate x_" + std::to_string(i) + " must be zero");
  }
  if (steps.size() < 4) {
    throw Error(ErrorCode::kPreconditionViolated,
                "divergence probe needs at least four steps");
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (!(steps[k] > 0.0) || (k > 0 && !(steps[k] < steps[k - 1]))) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "steps must be positive and strictly decreasing");
    }
  }

  const double base = Gradient(x, e)[i];
  std::vector<ProbePoint> out;
  out.reserve(steps.size());
  for (double h : steps) {
    Vec shifted = x;
    shifted[j] += h;
    out.push_back({h, (Gradient(shifted, e)[i] - base) / h});
  }
  return out;
}

double LogLogSlope(std::span<const ProbePoint> points) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (const ProbePoint& pt : points) {
    if (pt.quotient == 0.0) continue;
    const double lx = std::log(pt.step);
    const double ly = std::log(std::abs(pt.quotient));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) return 0.0;
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (m * sxy - sx * sy) / denom;
}

std::vector<double> GeometricSteps(double first, double last, int count) {
  if (count < 2 || !(first > last) || !(last > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "geometric steps need first > last > 0 and count >= 2");
  }
  std::vector<double> steps(count);
  const double ratio = std::log(last / first) / (count - 1);
  for (int k = 0; k < count; ++k) steps[k] = first * std::exp(ratio * k);
  return steps;
}

}  // namespace pcone
