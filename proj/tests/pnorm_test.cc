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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "pcone/finite_difference.h"
#include "test_util.h"

namespace pcone {
namespace {

using testing::NaiveNorm;
using testing::P;
using testing::V;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ExponentTest, ConjugateExamples) {
  EXPECT_EQ(Conjugate(P(2)), P(2));
  EXPECT_EQ(Conjugate(P(1)), Exponent::Infinity());
  EXPECT_EQ(Conjugate(Exponent::Infinity()), P(1));
  EXPECT_DOUBLE_EQ(Conjugate(P(1.5)).value(), 3.0);
}

TEST(ExponentTest, ConjugateIsAnInvolution) {
  EXPECT_EQ(Conjugate(Conjugate(P(1))), P(1));
  EXPECT_EQ(Conjugate(Conjugate(P(2))), P(2));
  for (double p : {1.1, 1.5, 2.5, 3.0, 7.25, 50.0}) {
    EXPECT_EQ(Conjugate(Conjugate(P(p))).value(), p) << p;
    const double q = Conjugate(P(p)).value();
    EXPECT_NEAR(1 / p + 1 / q, 1.0, 1e-15);
  }
}

TEST(ExponentTest, ParseAndValidation) {
  EXPECT_EQ(Exponent::Parse("inf"), Exponent::Infinity());
  EXPECT_EQ(Exponent::Parse("1.5"), P(1.5));
  EXPECT_EQ(Exponent::Parse("3"), P(3));
  EXPECT_PCONE_ERROR(Exponent::Parse("abc"), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(Exponent::Parse(""), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(Exponent::Parse("1.5x"), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(Exponent::Finite(0.5), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(Exponent::Finite(kInf), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(Exponent::Finite(std::nan("")), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Exponent::Infinity().ToString(), "inf");
  EXPECT_EQ(P(1.5).ToString(), "1.5");
  EXPECT_TRUE(std::isinf(Exponent::Infinity().value()));
}

TEST(NormTest, Examples) {
  EXPECT_DOUBLE_EQ(Norm(V({3, 4}), P(2)), 5.0);
  EXPECT_NEAR(Norm(V({1, 1, 1}), P(3)), 1.442250, 1e-6);
  EXPECT_DOUBLE_EQ(Norm(V({1, -7, 2}), Exponent::Infinity()), 7.0);
  EXPECT_DOUBLE_EQ(Norm(V({1, -7, 2}), P(1)), 10.0);
  EXPECT_EQ(Norm(V({0, 0}), P(3)), 0.0);
}

TEST(NormTest, AgreesWithNaivePowerSum) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const double p = 1.0 + 0.05 * k;
    const Vec x = testing::Gaussian(rng, 2 + k % 5);
    EXPECT_NEAR(Norm(x, P(p)), NaiveNorm(x, p), 1e-13 * NaiveNorm(x, p)) << p;
  }
}

TEST(NormTest, NoOverflowForLargeEntriesOrExponents) {
  const Vec big = V({1e200, 1e200});
  EXPECT_NEAR(Norm(big, P(3)) / 1e200, std::cbrt(2.0), 1e-14);
  EXPECT_NEAR(Norm(V({3, 4}), P(50)), 4.0 * std::pow(1 + std::pow(0.75, 50), 1.0 / 50), 1e-14);
  EXPECT_TRUE(std::isfinite(Norm(V({1e300, -1e300}), P(1.5))));
}

TEST(NormTest, PositiveHomogeneity) {
  std::mt19937_64 rng(3);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    for (int k = 0; k < 50; ++k) {
      const Vec x = testing::Gaussian(rng, 4);
      const double t = std::exp(testing::Gaussian(rng, 1)[0]);
      EXPECT_NEAR(Norm(t * x, P(p)), t * Norm(x, P(p)), 1e-12 * t * Norm(x, P(p)));
    }
  }
}

TEST(GradientTest, Examples) {
  const Vec g = Gradient(V({1, 1}), P(3));
  EXPECT_NEAR(g[0], 0.629961, 1e-6);
  EXPECT_NEAR(g[1], 0.629961, 1e-6);
  EXPECT_TRUE(Gradient(V({1, 0}), P(1.5)).isApprox(V({1, 0})));
  EXPECT_TRUE(Gradient(V({0, -2}), P(3)).isApprox(V({0, -1})));
}

TEST(GradientTest, MatchesCentralDifferences) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> expo(1.1, 5.0), mag(0.1, 2.0);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 200; ++k) {
    const Exponent p = P(expo(rng));
    Vec x(2 + k % 4);
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = (coin(rng) ? 1 : -1) * mag(rng);
    const Vec fd = fd::CentralGradient([&](const Vec& y) { return NaiveNorm(y, p.value()); },
                                       x, fd::GradientStep(x));
    EXPECT_LT((Gradient(x, p) - fd).cwiseAbs().maxCoeff(), 1e-8) << p.value();
  }
}

TEST(GradientTest, EulerIdentityAndDualNorm) {
  std::mt19937_64 rng(6);
  for (double p : {1.1, 1.5, 2.0, 3.0, 8.0}) {
    for (int k = 0; k < 50; ++k) {
      const Vec x = testing::Gaussian(rng, 5);
      const Vec g = Gradient(x, P(p));
      EXPECT_NEAR(g.dot(x), Norm(x, P(p)), 1e-10 * Norm(x, P(p)));
      EXPECT_NEAR(Norm(g, Conjugate(P(p))), 1.0, 1e-10);
    }
  }
}

TEST(GradientTest, Errors) {
  EXPECT_PCONE_ERROR(Gradient(V({0, 0}), P(3)), ErrorCode::kZeroVector);
  EXPECT_PCONE_ERROR(Gradient(V({1, 2}), P(1)), ErrorCode::kUnsupportedExponent);
  EXPECT_PCONE_ERROR(Gradient(V({1, 2}), Exponent::Infinity()),
                     ErrorCode::kUnsupportedExponent);
}

TEST(HessianTest, Examples) {
  EXPECT_NEAR(Hessian(V({1, 1}), P(3))(0, 1), -2 * std::pow(2.0, -5.0 / 3), 1e-12);
  EXPECT_NEAR(Hessian(V({1, 1}), P(3))(0, 1), -0.629961, 1e-6);
  EXPECT_EQ(Hessian(V({1, 0}), P(3))(0, 1), 0.0);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    const Vec x = testing::Gaussian(rng, 3);
    EXPECT_LT((Hessian(x, P(2)) * x).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HessianTest, MatchesDifferencedGradientAndNorm) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> expo(1.1, 5.0), mag(0.1, 2.0);
  for (int k = 0; k < 100; ++k) {
    const Exponent p = P(expo(rng));
    Vec x(2 + k % 3);
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = (k % 2 ? 1 : -1) * mag(rng);
    const Matrix h = Hessian(x, p);
    const Matrix jac = fd::CentralJacobian(
        [&](const Vec& y) { return Gradient(y, p); }, x, fd::kHessianStep);
    EXPECT_LT(testing::MaxAbs(h - jac), 1e-6 * testing::MaxAbs(h) + 1e-9);
    // Second differences of the norm itself: an oracle that never touches
    // the analytic gradient, at a coarser tolerance.
    const Matrix h2 = fd::CentralHessian(
        [&](const Vec& y) { return NaiveNorm(y, p.value()); }, x, 1e-4);
    EXPECT_LT(testing::MaxAbs(h - h2), 1e-5 * std::max(1.0, testing::MaxAbs(h)));
  }
}

TEST(HessianTest, SymmetricPsdWithRadialNullSpace) {
  std::mt19937_64 rng(10);
  for (double p : {1.3, 2.0, 2.5, 4.0}) {
    for (int k = 0; k < 50; ++k) {
      const Vec x = testing::Gaussian(rng, 4);
      const Matrix h = Hessian(x, P(p));
      EXPECT_EQ(h, h.transpose());
      EXPECT_LT((h * x).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, testing::MaxAbs(h)));
      Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
      EXPECT_GT(eig.eigenvalues().minCoeff(), -1e-9 * std::max(1.0, testing::MaxAbs(h)));
    }
  }
}

TEST(HessianTest, Errors) {
  EXPECT_PCONE_ERROR(Hessian(V({1, 0}), P(1.5)), ErrorCode::kNotTwiceDifferentiable);
  EXPECT_PCONE_ERROR(Hessian(V({0, 0}), P(3)), ErrorCode::kZeroVector);
  EXPECT_PCONE_ERROR(Hessian(V({1, 1}), P(1)), ErrorCode::kUnsupportedExponent);
}

TEST(ClassifyC2Test, Examples) {
  EXPECT_EQ(ClassifyC2(V({1, 0, 2}), P(1.5)), Smoothness::kNotTwiceSmooth);
  EXPECT_EQ(ClassifyC2(V({1, 1}), P(1.5)), Smoothness::kTwiceSmooth);
  EXPECT_EQ(ClassifyC2(V({1, 0}), P(3)), Smoothness::kTwiceSmooth);
  EXPECT_EQ(ClassifyC2(V({1, 0}), P(2)), Smoothness::kTwiceSmooth);
  EXPECT_PCONE_ERROR(ClassifyC2(V({0, 0}), P(1.5)), ErrorCode::kZeroVector);
}

TEST(DivergenceProbeTest, Examples) {
  const std::vector<double> steps = GeometricSteps(1e-2, 1e-6, 5);
  EXPECT_NEAR(LogLogSlope(C2DivergenceProbe(V({1, 0}), P(1.5), 1, 1, steps)), -0.5, 0.05);
  EXPECT_NEAR(LogLogSlope(C2DivergenceProbe(V({1, 0}), P(1.9), 1, 1, steps)), -0.1, 0.05);
  const auto smooth = C2DivergenceProbe(V({1, 0}), P(2), 1, 1, steps);
  EXPECT_NEAR(LogLogSlope(smooth), 0.0, 0.02);
  for (const ProbePoint& pt : smooth) EXPECT_LT(std::abs(pt.quotient), 2.0);
}

TEST(DivergenceProbeTest, QuotientMatchesClosedForm) {
  // At x = (1, 0) the partial along e_2 is h^{p-1} / ||(1, h)||_p^{p-1}.
  const double p = 1.5;
  const auto probe = C2DivergenceProbe(V({1, 0}), P(p), 1, 1, std::vector<double>{1e-2, 1e-3, 1e-4, 1e-5});
  for (const ProbePoint& pt : probe) {
    const double h = pt.step;
    const double expected = std::pow(h, p - 1) / std::pow(1 + std::pow(h, p), (p - 1) / p) / h;
    EXPECT_NEAR(pt.quotient, expected, 1e-9 * expected);
  }
}

TEST(DivergenceProbeTest, Preconditions) {
  const std::vector<double> steps = GeometricSteps(1e-2, 1e-6, 5);
  EXPECT_PCONE_ERROR(C2DivergenceProbe(V({1, 1}), P(1.5), 1, 1, steps),
                     ErrorCode::kPreconditionViolated);
  EXPECT_PCONE_ERROR(C2DivergenceProbe(V({1, 0}), P(1), 1, 1, steps),
                     ErrorCode::kPreconditionViolated);
  EXPECT_PCONE_ERROR(C2DivergenceProbe(V({1, 0}), P(1.5), 1, 1, std::vector<double>{1e-2, 1e-3, 1e-4}),
                     ErrorCode::kPreconditionViolated);
  EXPECT_PCONE_ERROR(C2DivergenceProbe(V({1, 0}), P(1.5), 1, 1, std::vector<double>{1e-3, 1e-2, 1e-4, 1e-5}),
                     ErrorCode::kPreconditionViolated);
  EXPECT_PCONE_ERROR(C2DivergenceProbe(V({1, 0}), P(1.5), 5, 1, steps),
                     ErrorCode::kPreconditionViolated);
}

TEST(DivergenceProbeTest, AgreesWithClassificationOverSeeds) {
  const std::vector<double> steps = GeometricSteps(1e-2, 1e-6, 5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> expo(1.1, 4.0);
    const double p = expo(rng);
    Vec x = testing::Gaussian(rng, 3);
    const int i = static_cast<int>(seed % 3);
    x[i] = 0.0;
    const double slope = LogLogSlope(C2DivergenceProbe(x, P(p), i, i, steps));
    if (ClassifyC2(x, P(p)) == Smoothness::kNotTwiceSmooth) {
      EXPECT_LT(slope, -0.02) << "seed " << seed << " p " << p;
    } else {
      EXPECT_GT(slope, -0.02) << "seed " << seed << " p " << p;
    }
  }
}

TEST(LogLogSlopeTest, ExactPowerLaw) {
  std::vector<ProbePoint> points;
  for (double h : GeometricSteps(1e-1, 1e-5, 5)) points.push_back({h, 3 * std::pow(h, -0.7)});
  EXPECT_NEAR(LogLogSlope(points), -0.7, 1e-12);
  EXPECT_EQ(LogLogSlope(std::vector<ProbePoint>{{1e-2, 1.0}}), 0.0);
}

TEST(GeometricStepsTest, EndpointsAndRatio) {
  const auto s = GeometricSteps(1e-2, 1e-6, 5);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_DOUBLE_EQ(s.front(), 1e-2);
  EXPECT_NEAR(s.back(), 1e-6, 1e-20);
  for (std::size_t k = 1; k < s.size(); ++k) EXPECT_NEAR(s[k] / s[k - 1], 0.1, 1e-12);
}

}  // namespace
}  // namespace pcone
