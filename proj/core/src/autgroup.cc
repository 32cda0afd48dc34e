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

#include "pcone/autgroup.h"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "pcone/error.h"
#include "pcone/pnorm.h"

namespace pcone {

GeneralizedPermutation GeneralizedPermutation::Create(std::vector<int> perm,
                                                      std::vector<int> signs) {
  if (perm.size() != signs.size() || perm.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "permutation and sign vectors must be non-empty and equal length");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int k = perm[i];
    if (k < 0 || k >= static_cast<int>(perm.size()) || seen[k]) {
      throw Error(ErrorCode::kInvalidArgument, "perm is not a bijection");
    }
    seen[k] = true;
    if (signs[i] != 1 && signs[i] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "signs must be +1 or -1");
    }
  }
  return GeneralizedPermutation(std::move(perm), std::move(signs));
}

GeneralizedPermutation GeneralizedPermutation::Identity(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return Create(std::move(perm), std::vector<int>(n, 1));
}

Vec GeneralizedPermutation::Apply(const Vec& x) const {
  if (x.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation/vector size mismatch");
  }
  Vec y(x.size());
  for (int i = 0; i < size(); ++i) y[i] = signs_[i] * x[perm_[i]];
  return y;
}

Matrix GeneralizedPermutation::ToMatrix() const {
  Matrix m = Matrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i) m(i, perm_[i]) = signs_[i];
  return m;
}

GeneralizedPermutation GeneralizedPermutation::Compose(
    const GeneralizedPermutation& other) const {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot compose different sizes");
  }
  // (P1 P2 x)_i = s1[i] * s2[p1[i]] * x[p2[p1[i]]]
  std::vector<int> perm(size()), signs(size());
  for (int i = 0; i < size(); ++i) {
    perm[i] = other.perm_[perm_[i]];
    signs[i] = signs_[i] * other.signs_[perm_[i]];
  }
  return GeneralizedPermutation(std::move(perm), std::move(signs));
}

GeneralizedPermutation GeneralizedPermutation::Inverse() const {
  std::vector<int> perm(size()), signs(size());
  for (int i = 0; i < size(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return GeneralizedPermutation(std::move(perm), std::move(signs));
}

int GeneralizedPermutation::ImageIndex(int i) const {
  for (int k = 0; k < size(); ++k) {
    if (perm_[k] == i) return k;
  }
  throw Error(ErrorCode::kInvalidArgument, "index out of range");
}

StructuredAutomorphism StructuredAutomorphism::Make(double alpha,
                                                    GeneralizedPermutation gp) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be a positive number");
  }
  return StructuredAutomorphism{alpha, std::move(gp)};
}

Matrix StructuredAutomorphism::ToMatrix() const {
  const int n = gp.size();
  Matrix m = Matrix::Zero(n + 1, n + 1);
  m(0, 0) = alpha;
  m.bottomRightCorner(n, n) = alpha * gp.ToMatrix();
  return m;
}

LinearMap StructuredAutomorphism::ToLinearMap() const {
  return LinearMap::FromMatrix(ToMatrix());
}

StructuredAutomorphism StructuredAutomorphism::Compose(
    const StructuredAutomorphism& other) const {
  return StructuredAutomorphism{alpha * other.alpha, gp.Compose(other.gp)};
}

StructuredAutomorphism StructuredAutomorphism::Inverse() const {
  return StructuredAutomorphism{1.0 / alpha, gp.Inverse()};
}

ConePoint Apply(const StructuredAutomorphism& a, const ConePoint& z) {
  if (z.ambient_dim() != a.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "map/point dimension mismatch");
  }
  return ConePoint{a.alpha * z.t, a.alpha * a.gp.Apply(z.x)};
}

ConePoint Apply(const LinearMap& a, const ConePoint& z) { return a.Apply(z); }

std::optional<StructuredAutomorphism> IsStructuralAutomorphism(
    const LinearMap& a, const ConeSpec& spec, double tol) {
  if (spec.exponent.IsTwo()) {
    throw Error(ErrorCode::kUnsupportedExponent,
                "Aut(K_2) is not structural; use LoewySchneider");
  }
  if (a.dim() != spec.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "map/cone dimension mismatch");
  }
  const Matrix& m = a.matrix();
  const double alpha = m(0, 0);
  if (!(alpha > 0.0)) return std::nullopt;
  const double band = tol * alpha;
  const int dim = a.dim();
  for (int k = 1; k < dim; ++k) {
    if (std::abs(m(0, k)) > band || std::abs(m(k, 0)) > band) return std::nullopt;
  }
  const int n = dim - 1;
  std::vector<int> perm(n), signs(n);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    // The largest entry of each row must be +-alpha; all others vanish.
    Eigen::Index col = 0;
    m.row(i + 1).tail(n).cwiseAbs().maxCoeff(&col);
    const double lead = m(i + 1, col + 1);
    if (std::abs(std::abs(lead) - alpha) > band || used[col]) return std::nullopt;
    for (int k = 0; k < n; ++k) {
      if (k != col && std::abs(m(i + 1, k + 1)) > band) return std::nullopt;
    }
    used[col] = true;
    perm[i] = static_cast<int>(col);
    signs[i] = lead > 0.0 ? 1 : -1;
  }
  return StructuredAutomorphism{
      alpha, GeneralizedPermutation::Create(std::move(perm), std::move(signs))};
}

LoewySchneiderResult LoewySchneider(const LinearMap& a, double tol) {
  const int dim = a.dim();
  Vec jdiag = -Vec::Ones(dim);
  jdiag[0] = 1.0;
  const Matrix& m = a.matrix();
  const Matrix gram = m.transpose() * jdiag.asDiagonal() * m;
  LoewySchneiderResult out;
  out.mu = gram(0, 0);
  if (!(out.mu > 0.0)) return out;
  const Matrix defect = gram - out.mu * Matrix(jdiag.asDiagonal());
  if (defect.cwiseAbs().maxCoeff() > tol * out.mu) return out;
  out.aut_or_neg_aut = true;
  out.preserves_cone = m(0, 0) > 0.0;
  return out;
}

OracleVerdict SamplingOracleAutomorphism(const LinearMap& a, const ConeSpec& spec,
                                         std::span<const ConePoint> net,
                                         double tol) {
  if (a.dim() != spec.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "map/cone dimension mismatch");
  }
  auto outside = [&](const ConePoint& w) {
    return Norm(w.x, spec.exponent) - w.t > tol * (1.0 + w.EuclideanNorm());
  };
  OracleVerdict verdict;
  for (const ConePoint& z : net) {
    if (outside(a.Apply(z))) {
      verdict.witness = z;
      return verdict;
    }
    if (outside(a.ApplyInverse(z))) {
      verdict.witness = z;
      verdict.witness_from_inverse = true;
      return verdict;
    }
  }
  return verdict;
}

OracleVerdict SamplingOracleAutomorphism(const LinearMap& a, const ConeSpec& spec,
                                         int samples, std::uint64_t seed,
                                         double tol) {
  const std::vector<ConePoint> net = SampleBoundary(spec, samples, seed);
  return SamplingOracleAutomorphism(a, spec, net, tol);
}

StructuredAutomorphism RandomAutomorphism(const ConeSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = spec.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  std::vector<int> signs(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) signs[i] = coin(rng) ? 1 : -1;
  std::uniform_real_distribution<double> log_alpha(std::log(0.1), std::log(10.0));
  return StructuredAutomorphism::Make(
      std::exp(log_alpha(rng)),
      GeneralizedPermutation::Create(std::move(perm), std::move(signs)));
}

HomogeneityResult HomogeneityProbe(const ConeSpec& spec, const ConePoint& target,
                                   double tol) {
  if (spec.exponent.IsTwo()) {
    throw Error(ErrorCode::kUnsupportedExponent,
                "K_2 is homogeneous; the probe applies to p != 2");
  }
  if (Contains(spec, target, tol) != Membership::kInterior) {
    throw Error(ErrorCode::kNotInterior, "target must be strictly interior");
  }
  HomogeneityResult out;
  if (target.x.cwiseAbs().maxCoeff() <= tol * target.t) {
    out.map = StructuredAutomorphism::Make(
        target.t, GeneralizedPermutation::Identity(spec.n()));
  }
  return out;
}

}  // namespace pcone
