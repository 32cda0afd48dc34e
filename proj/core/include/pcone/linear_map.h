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

#ifndef PCONE_LINEAR_MAP_H_
#define PCONE_LINEAR_MAP_H_

#include "pcone/cone.h"
#include "pcone/types.h"

namespace pcone {

// An invertible square matrix with its inverse computed once and validated:
// ||A A^-1 - I||_inf < 1e-10 * cond_inf(A).
class LinearMap {
 public:
  // Throws kDimensionMismatch for non-square input and kSingularMatrix when
  // the matrix is singular or the inverse fails validation.
  static LinearMap FromMatrix(Matrix matrix);
  static LinearMap Identity(int dim);

  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  // ||A||_inf * ||A^-1||_inf
  double condition() const { return condition_; }

  // Throws kDimensionMismatch when z does not live in R^dim.
  ConePoint Apply(const ConePoint& z) const;
  ConePoint ApplyInverse(const ConePoint& z) const;

  LinearMap Inverse() const;

 private:
  LinearMap(Matrix matrix, Matrix inverse, double condition)
      : matrix_(std::move(matrix)),
        inverse_(std::move(inverse)),
        condition_(condition) {}

  Matrix matrix_;
  Matrix inverse_;
  double condition_;
};

// The matrix identifying K_1^3 with K_inf^3: diag(1, R) with R the rotation
// by pi/4 scaled by sqrt(2), i.e. [[1,0,0],[0,1,-1],[0,1,1]].
LinearMap K1ToKInfMap();

}  // namespace pcone

#endif  // PCONE_LINEAR_MAP_H_
