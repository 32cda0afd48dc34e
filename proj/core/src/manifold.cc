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

#include "pcone/manifold.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pcone/error.h"
#include "pcone/pnorm.h"

namespace pcone {
namespace {

void RequireNonzero(const Vec& x) {
  if (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "x must be nonzero");
  }
}

void RequireDimension(const GraphChart& chart, const Vec& x) {
  if (x.size() != chart.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "chart/point dimension mismatch");
  }
}

}  // namespace

GraphChart::GraphChart(Exponent exponent, int n) : exponent_(exponent), n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "graph chart needs n >= 1");
  }
}

double GraphChart::Height(const Vec& x) const {
  RequireDimension(*this, x);
  return Norm(x, exponent_);
}

ConePoint GraphChart::Lift(const Vec& x) const { return ConePoint{Height(x), x}; }

TangentBasis ComputeTangentBasis(const GraphChart& chart, const Vec& x) {
  RequireDimension(chart, x);
  RequireNonzero(x);
  const Vec grad = Gradient(x, chart.exponent());
  const int n = chart.n();
  TangentBasis basis{chart.Lift(x), Matrix::Zero(n + 1, n)};
  basis.vectors.row(0) = grad.transpose();
  basis.vectors.bottomRows(n).setIdentity();
  return basis;
}

Vec LambdaVector(const Matrix& vectors) {
  const Eigen::Index n = vectors.rows();
  if (vectors.cols() != n - 1 || n < 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "Lambda needs n-1 vectors in R^n");
  }
  // Work on the columns in lexicographic order and restore the permutation
  // sign afterwards, so reordering the inputs changes only the sign bit.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n - 1));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const auto column_less = [&vectors](Eigen::Index a, Eigen::Index b) {
    const double* ca = vectors.col(a).data();
    const double* cb = vectors.col(b).data();
    return std::lexicographical_compare(ca, ca + vectors.rows(), cb,
                                        cb + vectors.rows());
  };
  std::sort(order.begin(), order.end(), column_less);
  double parity = 1.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] > order[j]) parity = -parity;
    }
  }
  Matrix sorted(n, n - 1);
  for (std::size_t c = 0; c < order.size(); ++c) {
    sorted.col(static_cast<Eigen::Index>(c)) = vectors.col(order[c]);
  }
  for (Eigen::Index c = 1; c < n - 1; ++c) {
    if (sorted.col(c) == sorted.col(c - 1)) return Vec::Zero(n);
  }
  // <Lambda, e_k> = det[x^1 .. x^{n-1} e_k] = (-1)^(k + n-1) det(minor_k)
  // with 0-based k and minor_k the inputs without row k.
  Vec lambda(n);
  Matrix minor(n - 1, n - 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    minor.topRows(k) = sorted.topRows(k);
    minor.bottomRows(n - 1 - k) = sorted.bottomRows(n - 1 - k);
    const double sign = ((k + n - 1) % 2 == 0) ? parity : -parity;
    lambda[k] = sign * minor.determinant();
  }
  return lambda;
}

Vec GaussNormal(const GraphChart& chart, const Vec& x) {
  const TangentBasis basis = ComputeTangentBasis(chart, x);
  Vec normal = LambdaVector(basis.vectors);
  normal /= normal.norm();
  if (normal[0] < 0.0) normal = -normal;
  return normal;
}

Vec BoundaryMap(const LinearMap& a, const GraphChart& from, const GraphChart& to,
                const Vec& x, double tol) {
  RequireDimension(from, x);
  RequireNonzero(x);
  if (a.dim() != from.n() + 1 || to.n() != from.n()) {
    throw Error(ErrorCode::kDimensionMismatch, "map/chart dimension mismatch");
  }
  const ConePoint image = a.Apply(from.Lift(x));
  const double gap = image.t - to.Height(image.x);
  if (std::abs(gap) > tol * (1.0 + image.EuclideanNorm())) {
    throw Error(ErrorCode::kNotOnTargetGraph,
                "image misses the target graph by " + std::to_string(gap));
  }
  return image.x;
}

std::vector<int> LocusMembership(const Vec& x, double tol) {
  RequireNonzero(x);
  std::vector<int> strata;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) <= tol) strata.push_back(static_cast<int>(i));
  }
  return strata;
}

}  // namespace pcone
