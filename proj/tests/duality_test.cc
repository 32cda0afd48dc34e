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

#include "pcone/duality.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "pcone/autgroup.h"
#include "pcone/nelder_mead.h"
#include "pcone/serialization.h"
#include "test_util.h"

namespace pcone {
namespace {

using testing::NaiveNorm;
using testing::P;
using testing::Pt;
using testing::V;

constexpr double kInf = std::numeric_limits<double>::infinity();

ConeSpec K(double p, int dim) { return ConeSpec::Make(P(p), dim); }

Matrix BMatrix() {
  Matrix b(3, 3);
  b << 1, 0, 0, 0, 1, -1, 0, 1, 1;
  return b;
}

TEST(NelderMeadTest, MinimizesRosenbrock) {
  auto rosen = [](const Vec& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  NelderMeadOptions o;
  o.max_evaluations = 4000;
  o.target = -1;
  const auto r = NelderMead(rosen, V({-1.2, 1.0}), o);
  EXPECT_LT((r.x - V({1, 1})).norm(), 1e-6);
  EXPECT_LE(r.evaluations, 4000);
}

TEST(NelderMeadTest, StopsAtTargetAndRespectsBudget) {
  int calls = 0;
  auto sphere = [&](const Vec& x) {
    ++calls;
    return x.squaredNorm();
  };
  NelderMeadOptions o;
  o.max_evaluations = 200;
  o.target = 1e-3;
  const auto r = NelderMead(sphere, V({1, 1, 1}), o);
  EXPECT_LE(r.value, 1e-3);
  EXPECT_EQ(r.evaluations, calls);
  o.target = -1;
  calls = 0;
  const auto s = NelderMead(sphere, V({1, 1, 1}), o);
  EXPECT_EQ(s.evaluations, 200);
  EXPECT_EQ(calls, 200);
}

TEST(PdFactorTest, RoundTripAndPositiveDefinite) {
  std::mt19937_64 rng(1);
  for (int dim = 1; dim <= 5; ++dim) {
    EXPECT_EQ(PdFactor::ParamCount(dim), dim * (dim + 1) / 2);
    for (int k = 0; k < 50; ++k) {
      const Vec params = 2 * testing::Gaussian(rng, PdFactor::ParamCount(dim));
      const PdFactor f = PdFactor::FromParams(dim, {params.data(), static_cast<size_t>(params.size())});
      const Matrix a = f.Reconstruct();
      EXPECT_EQ(a, a.transpose());
      Eigen::SelfAdjointEigenSolver<Matrix> eig(a);
      EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
      EXPECT_LT((f.Params() - params).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT(testing::MaxAbs(f.ReconstructInverse() * a - Matrix::Identity(dim, dim)),
                1e-8 * eig.eigenvalues().maxCoeff() / eig.eigenvalues().minCoeff());
      const PdFactor g = PdFactor::FromMatrix(a);
      EXPECT_LT(testing::MaxAbs(g.Reconstruct() - a), 1e-12 * testing::MaxAbs(a));
    }
  }
  EXPECT_PCONE_ERROR(PdFactor::FromMatrix(-Matrix::Identity(2, 2)), ErrorCode::kInvalidArgument);
  EXPECT_PCONE_ERROR(PdFactor::FromParams(2, std::vector<double>{1.0}),
                     ErrorCode::kInvalidArgument);
}

TEST(DefectTest, ScaleInvariantHingeOnTheNormGap) {
  EXPECT_EQ(Defect(K(2, 3), Pt(1, {0.6, 0.8})), 0.0);
  EXPECT_EQ(Defect(K(2, 3), Pt(2, {1, 0})), 0.0);
  EXPECT_NEAR(Defect(K(1, 3), Pt(1, {1, 1})), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(Defect(K(1, 3), Pt(1e6, {1e6, 1e6})), 1 / std::sqrt(3.0), 1e-15);
}

TEST(ViolationTest, Examples) {
  const LinearMap b = LinearMap::FromMatrix(BMatrix());
  EXPECT_LE(Violation(b, K(1, 3), K(kInf, 3), 1000, 42), 1e-12);
  EXPECT_EQ(Violation(LinearMap::Identity(3), K(2, 3), K(2, 3), 1000, 42), 0.0);
  EXPECT_GT(Violation(LinearMap::Identity(3), K(1, 3), K(kInf, 3), 1000, 42), 0.0);
  EXPECT_PCONE_ERROR(Violation(LinearMap::Identity(4), K(1, 3), K(kInf, 3), 10, 1),
                     ErrorCode::kDimensionMismatch);
  EXPECT_PCONE_ERROR(Violation(b, K(1, 3), K(kInf, 4), 10, 1), ErrorCode::kDimensionMismatch);
}

TEST(ViolationTest, MeanBelowMaxAndDeterministic) {
  const LinearMap a = LinearMap::Identity(4);
  const double mx = Violation(a, K(1.5, 4), K(3, 4), 500, 3, Aggregation::kMax);
  const double mean = Violation(a, K(1.5, 4), K(3, 4), 500, 3, Aggregation::kMean);
  EXPECT_GT(mean, 0.0);
  EXPECT_LE(mean, mx);
  EXPECT_EQ(mx, Violation(a, K(1.5, 4), K(3, 4), 500, 3, Aggregation::kMax));
}

TEST(ViolationTest, ZeroForExactIsomorphismsOverSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_LE(Violation(LinearMap::FromMatrix(BMatrix()), K(1, 3), K(kInf, 3), 200, seed), 1e-12);
    const auto a = RandomAutomorphism(K(3, 4), seed);
    EXPECT_LE(Violation(a.ToLinearMap(), K(3, 4), K(3, 4), 200, seed), 1e-12);
  }
}

TEST(ViolationTest, PointwiseDefectInvariantUnderTargetAutomorphisms) {
  std::mt19937_64 rng(4);
  const ConeSpec to = K(3, 4);
  for (std::uint64_t k = 0; k < 50; ++k) {
    auto sa = RandomAutomorphism(to, k);
    const Matrix a = Matrix::Identity(4, 4) + 0.3 * Eigen::MatrixXd::NullaryExpr(4, 4, [&] {
      return testing::Gaussian(rng, 1)[0];
    });
    for (const ConePoint& z : SampleBoundary(K(1.5, 4), 20, k)) {
      const ConePoint w = ConePoint::FromStacked(a * z.Stacked());
      const ConePoint pw = Apply(sa, w);
      EXPECT_NEAR(Defect(to, pw), Defect(to, w), 1e-12);
    }
  }
}

TEST(SampleNetTest, FrozenPerSeed) {
  const SampleNet a = SampleNet::Make(K(1, 3), K(kInf, 3), 50, 9);
  const SampleNet b = SampleNet::Make(K(1, 3), K(kInf, 3), 50, 9);
  EXPECT_EQ(a.from_points, b.from_points);
  EXPECT_EQ(a.to_points, b.to_points);
  EXPECT_EQ(a.samples(), 50);
  const auto from = SampleBoundary(K(1, 3), 50, 9);
  const auto to = SampleBoundary(K(kInf, 3), 50, 10);
  EXPECT_EQ(a.from_points.col(7), from[7].Stacked());
  EXPECT_EQ(a.to_points.col(7), to[7].Stacked());
}

void ExpectReportConsistent(const IsoSearchReport& r, const SearchOptions& o) {
  EXPECT_EQ(r.verdict == SearchVerdict::kFoundIso, r.best_violation <= o.accept_threshold);
  EXPECT_EQ(r.in_hysteresis_band, r.best_violation > o.accept_threshold &&
                                      r.best_violation <= 100 * o.accept_threshold);
  EXPECT_EQ(static_cast<int>(r.restart_violations.size()), r.restarts_run);
  EXPECT_LE(r.restarts_run, r.restarts);
  EXPECT_EQ(r.restarts, o.restarts);
  EXPECT_EQ(r.seed, o.seed);
  EXPECT_EQ(r.samples_per_eval, o.samples);
  EXPECT_LE(r.evaluations, o.budget + o.restarts);
  EXPECT_GE(r.best_violation, 0.0);
  for (double v : r.restart_violations) EXPECT_GE(v, r.best_violation);
}

TEST(SelfDualSearchTest, SecondOrderConeIsSelfDual) {
  for (int dim : {3, 4, 5}) {
    SearchOptions o;
    o.restarts = 10;
    const auto r = SelfDualSearch(K(2, dim), o);
    EXPECT_EQ(r.verdict, SearchVerdict::kFoundIso) << dim;
    EXPECT_LT(r.best_violation, 1e-9);
    ExpectReportConsistent(r, o);
    const Matrix a = r.best_map.matrix();
    EXPECT_EQ(a, a.transpose());
  }
}

TEST(SelfDualSearchTest, PerturbedStartsAlsoReachTheSecondOrderCone) {
  // Excludes the identity start by demanding a second restart.
  SearchOptions o;
  o.restarts = 3;
  o.budget = 12000;
  o.accept_threshold = 1e-9;
  const SampleNet net = SampleNet::Make(K(2, 3), K(2, 3), o.samples, o.seed);
  std::mt19937_64 rng(2);
  int reached = 0;
  for (int k = 0; k < 5; ++k) {
    const Vec start = 0.5 * testing::Gaussian(rng, PdFactor::ParamCount(3));
    NelderMeadOptions nm;
    nm.initial_step = 0.2;
    nm.max_evaluations = 3000;
    nm.target = o.accept_threshold;
    const auto result = NelderMead(
        [&](const Vec& params) {
          const PdFactor f =
              PdFactor::FromParams(3, {params.data(), static_cast<size_t>(params.size())});
          return Violation(f.Reconstruct(), f.ReconstructInverse(), net);
        },
        start, nm);
    reached += result.value <= o.accept_threshold;
  }
  EXPECT_GE(reached, 4);
}

TEST(SelfDualSearchTest, NonEuclideanConesAreNotSelfDual) {
  SearchOptions o;
  const auto r15 = SelfDualSearch(K(1.5, 3), o);
  EXPECT_EQ(r15.verdict, SearchVerdict::kNoIsoFound);
  EXPECT_GT(r15.best_violation, 1e-3);
  ExpectReportConsistent(r15, o);
  const Matrix a = r15.best_map.matrix();
  EXPECT_EQ(a, a.transpose());
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Matrix>(a).eigenvalues().minCoeff(), 0.0);

  o.restarts = 10;
  const auto r1 = SelfDualSearch(K(1, 3), o);
  EXPECT_EQ(r1.verdict, SearchVerdict::kNoIsoFound);
  EXPECT_GT(r1.best_violation, 1e-7);
}

TEST(SelfDualSearchTest, DeterministicPerSeed) {
  SearchOptions o;
  o.restarts = 4;
  o.budget = 2000;
  o.samples = 200;
  o.seed = 5;
  const Json a = ToJson(SelfDualSearch(K(3, 3), o));
  const Json b = ToJson(SelfDualSearch(K(3, 3), o));
  EXPECT_EQ(a.dump(), b.dump());
  o.seed = 6;
  EXPECT_NE(ToJson(SelfDualSearch(K(3, 3), o)).dump(), a.dump());
}

TEST(IsoSearchTest, Examples) {
  const SearchOptions o = DefaultIsoSearchOptions();
  EXPECT_EQ(o.accept_threshold, 1e-6);
  const auto found = IsoSearch(K(1, 3), K(kInf, 3), o);
  EXPECT_EQ(found.verdict, SearchVerdict::kFoundIso);
  EXPECT_LT(found.best_violation, 1e-6);
  ExpectReportConsistent(found, o);

  const auto none = IsoSearch(K(1.5, 3), K(3, 3), o);
  EXPECT_EQ(none.verdict, SearchVerdict::kNoIsoFound);
  ExpectReportConsistent(none, o);

  SearchOptions strict = o;
  strict.accept_threshold = 1e-9;
  const auto same = IsoSearch(K(3, 4), K(3, 4), strict);
  EXPECT_EQ(same.verdict, SearchVerdict::kFoundIso);
  EXPECT_EQ(same.best_violation, 0.0);
  EXPECT_EQ(same.restarts_run, 1);
  EXPECT_PCONE_ERROR(IsoSearch(K(1, 3), K(1, 4), o), ErrorCode::kDimensionMismatch);
}

// Eigenvalues of a symmetric 2x2 block in closed form.
double MinEigen2x2(double a, double b, double c) {
  return (a + c) / 2 - std::sqrt((a - c) * (a - c) / 4 + b * b);
}

TEST(FourCandidatesTest, NoneIsPositiveDefinite) {
  const auto candidates = FourCandidatesCheck();
  ASSERT_EQ(candidates.size(), 4u);
  Matrix first(3, 3), second(3, 3);
  first << 1, 0, 0, 0, -1, -1, 0, -1, 1;
  second << 1, 0, 0, 0, 1, 1, 0, 1, -1;
  int seen_first = 0, seen_second = 0;
  for (const CandidateEigen& c : candidates) {
    EXPECT_EQ(c.matrix, c.matrix.transpose());
    EXPECT_EQ(c.matrix(0, 0), 1.0);
    EXPECT_TRUE(c.matrix.row(0).tail(2).isZero(0.0));
    const double oracle = std::min(
        1.0, MinEigen2x2(c.matrix(1, 1), c.matrix(1, 2), c.matrix(2, 2)));
    EXPECT_NEAR(c.min_eigenvalue, oracle, 1e-14);
    EXPECT_NEAR(c.min_eigenvalue, -std::sqrt(2.0), 1e-14);
    EXPECT_LT(c.min_eigenvalue, 0.0);
    seen_first += c.matrix == first;
    seen_second += c.matrix == second;
    // Each candidate is B times a generalized permutation automorphism of K_1.
    const Matrix c_of_b = BMatrix().inverse() * c.matrix;
    EXPECT_TRUE(IsStructuralAutomorphism(LinearMap::FromMatrix(c_of_b), K(1, 3), 1e-12));
  }
  EXPECT_EQ(seen_first, 1);
  EXPECT_EQ(seen_second, 1);
}

TEST(CertifyIsoTest, Examples) {
  const auto b = CertifyIso(LinearMap::FromMatrix(BMatrix()), K(1, 3), K(kInf, 3));
  EXPECT_TRUE(b.exact_polyhedral);
  EXPECT_EQ(b.violation, 0.0);
  EXPECT_TRUE(CertifyIso(LinearMap::Identity(3), K(1, 3), K(1, 3)).exact_polyhedral);
  const auto numeric = CertifyIso(LinearMap::Identity(3), K(1.5, 3), K(3, 3));
  EXPECT_FALSE(numeric.exact_polyhedral);
  EXPECT_GT(numeric.violation, 0.0);
  // Witness (1, x) with ||x||_1.5 = 1 has ||x||_3 < 1: the inverse side fails.
  const Vec x = V({1, 1}) / NaiveNorm(V({1, 1}), 1.5);
  EXPECT_LT(NaiveNorm(x, 3), 1.0);
  EXPECT_FALSE(CertifyIso(LinearMap::Identity(3), K(1, 3), K(kInf, 3)).exact_polyhedral);
  EXPECT_FALSE(CertifyIso(LinearMap::Identity(4), K(1, 4), K(kInf, 4)).exact_polyhedral);
  EXPECT_PCONE_ERROR(CertifyIso(LinearMap::Identity(3), K(1, 3), K(1, 4)),
                     ErrorCode::kDimensionMismatch);
}

TEST(CertifyIsoTest, ExactCertificateImpliesZeroViolation) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto a = RandomAutomorphism(K(kInf, 4), k);
    const LinearMap m = a.ToLinearMap();
    ASSERT_TRUE(CertifyIso(m, K(kInf, 4), K(kInf, 4)).exact_polyhedral);
    EXPECT_LE(Violation(m, K(kInf, 4), K(kInf, 4), 300, k), 1e-12);
  }
}

}  // namespace
}  // namespace pcone
