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

#ifndef PCONE_TESTS_TEST_UTIL_H_
#define PCONE_TESTS_TEST_UTIL_H_

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "pcone/cone.h"
#include "pcone/error.h"
#include "pcone/exponent.h"
#include "pcone/types.h"

// Asserts that `stmt` throws pcone::Error with the given code.
#define EXPECT_PCONE_ERROR(stmt, expected_code)                        \
  do {                                                                 \
    try {                                                              \
      stmt;                                                            \
      ADD_FAILURE() << "expected " << #expected_code << " from " #stmt; \
    } catch (const ::pcone::Error& e) {                                \
      EXPECT_EQ(e.code(), expected_code) << e.what();                  \
    }                                                                  \
  } while (0)

namespace pcone::testing {

inline Exponent P(double p) {
  return std::isinf(p) ? Exponent::Infinity() : Exponent::Finite(p);
}

inline Vec V(std::initializer_list<double> values) {
  Vec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

inline ConePoint Pt(double t, std::initializer_list<double> x) { return {t, V(x)}; }

inline Vec Gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

// Independent p-norm: straight power sum in long double, no rescaling.
inline double NaiveNorm(const Vec& x, double p) {
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
  long double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += std::pow(static_cast<long double>(std::abs(x[i])), static_cast<long double>(p));
  }
  return static_cast<double>(std::pow(s, 1.0L / p));
}

inline double MaxAbs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace pcone::testing

#endif  // PCONE_TESTS_TEST_UTIL_H_
