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

#include "pcone/linear_map.h"

#include <cmath>
#include <string>
#include <utility>

#include "pcone/error.h"

namespace pcone {
namespace {

double InfNorm(const Matrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace

LinearMap LinearMap::FromMatrix(Matrix matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "linear map must be square, got " + std::to_string(matrix.rows()) +
                    "x" + std::to_string(matrix.cols()));
  }
  if (!matrix.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "linear map has non-finite entries");
  }
  Eigen::FullPivLU<Matrix> lu(matrix);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kSingularMatrix, "linear map is singular");
  }
  Matrix inverse = lu.inverse();
  const double condition = InfNorm(matrix) * InfNorm(inverse);
  const Eigen::Index n = matrix.rows();
  const double residual = InfNorm(matrix * inverse - Matrix::Identity(n, n));
  if (!std::isfinite(condition) || !(residual < 1e-10 * condition)) {
    throw Error(ErrorCode::kSingularMatrix,
                "inverse failed validation (residual " + std::to_string(residual) +
                    ", condition " + std::to_string(condition) + ")");
  }
  return LinearMap(std::move(matrix), std::move(inverse), condition);
}

LinearMap LinearMap::Identity(int dim) {
  return FromMatrix(Matrix::Identity(dim, dim));
}

ConePoint LinearMap::Apply(const ConePoint& z) const {
  if (z.ambient_dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "map/point dimension mismatch");
  }
  return ConePoint::FromStacked(matrix_ * z.Stacked());
}

ConePoint LinearMap::ApplyInverse(const ConePoint& z) const {
  if (z.ambient_dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "map/point dimension mismatch");
  }
  return ConePoint::FromStacked(inverse_ * z.Stacked());
}

LinearMap LinearMap::Inverse() const {
  return LinearMap(inverse_, matrix_, condition_);
}

LinearMap K1ToKInfMap() {
  Matrix b(3, 3);
  b << 1, 0, 0,
       0, 1, -1,
       0, 1, 1;
  return LinearMap::FromMatrix(std::move(b));
}

}  // namespace pcone
