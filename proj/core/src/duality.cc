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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "pcone/autgroup.h"
#include "pcone/error.h"
#include "pcone/nelder_mead.h"
#include "pcone/pnorm.h"

namespace pcone {

PdFactor PdFactor::FromParams(int dim, std::span<const double> params) {
  if (dim < 1 || static_cast<int>(params.size()) != ParamCount(dim)) {
    throw Error(ErrorCode::kInvalidArgument, "wrong PD factor parameter count");
  }
  Matrix lower = Matrix::Zero(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) lower(i, i) = std::exp(params[k++]);
  for (int i = 1; i < dim; ++i) {
    for (int j = 0; j < i; ++j) lower(i, j) = params[k++];
  }
  return PdFactor(std::move(lower));
}

PdFactor PdFactor::FromMatrix(const Matrix& spd) {
  Eigen::LLT<Matrix> llt(0.5 * (spd + spd.transpose()));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not positive definite");
  }
  return PdFactor(llt.matrixL());
}

Matrix PdFactor::ReconstructInverse() const {
  const Matrix linv = lower_.triangularView<Eigen::Lower>().solve(
      Matrix::Identity(dim(), dim()));
  return linv.transpose() * linv;
}

Vec PdFactor::Params() const {
  Vec params(ParamCount(dim()));
  Eigen::Index k = 0;
  for (int i = 0; i < dim(); ++i) params[k++] = std::log(lower_(i, i));
  for (int i = 1; i < dim(); ++i) {
    for (int j = 0; j < i; ++j) params[k++] = lower_(i, j);
  }
  return params;
}

const char* AggregationName(Aggregation a) {
  return a == Aggregation::kMax ? "max" : "mean";
}

namespace {

Matrix StackColumns(const std::vector<ConePoint>& points) {
  Matrix m(points.front().ambient_dim(), static_cast<Eigen::Index>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) m.col(k) = points[k].Stacked();
  return m;
}

double ColumnDefect(const ConeSpec& cone, const Eigen::Ref<const Vec>& w) {
  const double excess = Norm(w.tail(w.size() - 1), cone.exponent) - w[0];
  if (!(excess > 0.0)) return std::isnan(excess) ? HUGE_VAL : 0.0;
  // Scale-invariant: A and alpha * A score the same.
  return excess / w.norm();
}

}  // namespace

SampleNet SampleNet::Make(const ConeSpec& from, const ConeSpec& to, int samples,
                          std::uint64_t seed) {
  if (from.ambient_dim != to.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "cones differ in dimension");
  }
  SampleNet net{from, to, seed, {}, {}};
  net.from_points = StackColumns(SampleBoundary(from, samples, seed));
  net.to_points = StackColumns(SampleBoundary(to, samples, seed + 1));
  return net;
}

double Defect(const ConeSpec& cone, const ConePoint& w) {
  if (w.ambient_dim() != cone.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "point/cone dimension mismatch");
  }
  return ColumnDefect(cone, w.Stacked());
}

double Violation(const Matrix& a, const Matrix& a_inverse, const SampleNet& net,
                 Aggregation aggregation) {
  const Eigen::Index dim = net.from_points.rows();
  if (a.rows() != dim || a.cols() != dim || a_inverse.rows() != dim ||
      a_inverse.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "map/sample-net dimension mismatch");
  }
  const Matrix forward = a * net.from_points;
  const Matrix backward = a_inverse * net.to_points;
  double worst = 0.0;
  double total = 0.0;
  auto accumulate = [&](const Matrix& images, const ConeSpec& cone) {
    for (Eigen::Index k = 0; k < images.cols(); ++k) {
      const double d = ColumnDefect(cone, images.col(k));
      worst = std::max(worst, d);
      total += d;
    }
  };
  accumulate(forward, net.to);
  accumulate(backward, net.from);
  if (aggregation == Aggregation::kMax) return worst;
  return total / static_cast<double>(forward.cols() + backward.cols());
}

double Violation(const LinearMap& a, const ConeSpec& from, const ConeSpec& to,
                 int samples, std::uint64_t seed, Aggregation aggregation) {
  if (a.dim() != from.ambient_dim || a.dim() != to.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "map/cone dimension mismatch");
  }
  const SampleNet net = SampleNet::Make(from, to, samples, seed);
  return Violation(a.matrix(), a.inverse(), net, aggregation);
}

const char* SearchVerdictName(SearchVerdict v) {
  return v == SearchVerdict::kFoundIso ? "FoundIso" : "NoIsoFound";
}

SearchOptions DefaultIsoSearchOptions() {
  SearchOptions options;
  options.accept_threshold = 1e-6;
  return options;
}

namespace {

// Parameter vector -> (A, A^-1); nullopt when the map is numerically
// singular.
using Decoder =
    std::function<std::optional<std::pair<Matrix, Matrix>>(const Vec&)>;
// Restart index -> starting parameters.
using Starter = std::function<Vec(int, std::mt19937_64&)>;

constexpr double kSingularPenalty = 1e3;

IsoSearchReport RunSearch(const ConeSpec& from, const ConeSpec& to,
                          const SearchOptions& options, const Decoder& decode,
                          const Starter& start) {
  if (options.restarts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  }
  if (options.samples < 1 || options.budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples and budget must be >= 1");
  }
  const SampleNet net = SampleNet::Make(from, to, options.samples, options.seed);
  auto objective = [&](const Vec& params) {
    const auto maps = decode(params);
    if (!maps) return kSingularPenalty;
    return Violation(maps->first, maps->second, net, options.aggregation);
  };

  IsoSearchReport report;
  report.restarts = options.restarts;
  report.samples_per_eval = options.samples;
  report.seed = options.seed;
  report.accept_threshold = options.accept_threshold;
  report.best_violation = std::numeric_limits<double>::infinity();

  // Half of the budget explores from the restart points, the rest continues
  // the simplex search from the best point found.
  const int explore_budget = options.restarts > 1 ? options.budget / 2 : options.budget;
  const int per_restart = std::max(1, explore_budget / options.restarts);
  std::optional<Vec> best_params;
  for (int r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ull + 7919ull * (r + 1));
    const Vec x0 = start(r, rng);
    NelderMeadOptions nm;
    nm.max_evaluations = per_restart;
    nm.initial_step = 0.2;
    nm.target = options.accept_threshold;
    const NelderMeadResult result = NelderMead(objective, x0, nm);
    report.evaluations += result.evaluations;
    report.restart_violations.push_back(result.value);
    ++report.restarts_run;
    // Strict improvement only, so ties keep the lowest restart index.
    if (result.value < report.best_violation) {
      report.best_violation = result.value;
      best_params = result.x;
    }
    if (report.best_violation <= options.accept_threshold) break;
  }
  const int remaining = options.budget - report.evaluations;
  if (report.best_violation > options.accept_threshold && remaining > 0) {
    NelderMeadOptions nm;
    nm.max_evaluations = remaining;
    nm.initial_step = 0.02;
    nm.target = options.accept_threshold;
    const NelderMeadResult result = NelderMead(objective, *best_params, nm);
    report.evaluations += result.evaluations;
    report.polished_violation = result.value;
    if (result.value < report.best_violation) {
      report.best_violation = result.value;
      best_params = result.x;
    }
  }
  const auto maps = decode(*best_params);
  report.best_map = maps ? LinearMap::FromMatrix(maps->first)
                         : LinearMap::Identity(from.ambient_dim);
  if (report.best_violation <= options.accept_threshold) {
    report.verdict = SearchVerdict::kFoundIso;
  } else {
    report.verdict = SearchVerdict::kNoIsoFound;
    report.in_hysteresis_band =
        report.best_violation <= 100.0 * options.accept_threshold;
  }
  return report;
}

Matrix GaussianMatrix(int dim, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, sigma);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
  }
  return g;
}

}  // namespace

IsoSearchReport SelfDualSearch(const ConeSpec& spec, const SearchOptions& options) {
  const int dim = spec.ambient_dim;
  const ConeSpec dual = Dual(spec);
  Decoder decode = [dim](const Vec& params) -> std::optional<std::pair<Matrix, Matrix>> {
    const PdFactor factor = PdFactor::FromParams(
        dim, std::span<const double>(params.data(), params.size()));
    const Matrix a = factor.Reconstruct();
    const Matrix a_inverse = factor.ReconstructInverse();
    if (!a.allFinite() || !a_inverse.allFinite()) return std::nullopt;
    return std::make_pair(a, a_inverse);
  };
  Starter start = [&](int r, std::mt19937_64& rng) -> Vec {
    const int count = PdFactor::ParamCount(dim);
    if (r == 0) return Vec::Zero(count);
    std::normal_distribution<double> gauss(0.0, options.perturbation);
    if (r % 2 == 1) {
      Vec params(count);
      for (int k = 0; k < count; ++k) params[k] = gauss(rng);
      return params;
    }
    // Symmetrized, perturbed random automorphism with its spectrum floored
    // to make it PD.
    const StructuredAutomorphism s = RandomAutomorphism(spec, rng());
    Matrix m = s.ToMatrix() / s.alpha + GaussianMatrix(dim, options.perturbation, rng);
    m = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
    const Vec clipped = eig.eigenvalues().cwiseMax(0.1);
    m = eig.eigenvectors() * clipped.asDiagonal() * eig.eigenvectors().transpose();
    return PdFactor::FromMatrix(m).Params();
  };
  return RunSearch(spec, dual, options, decode, start);
}

IsoSearchReport IsoSearch(const ConeSpec& from, const ConeSpec& to,
                          const SearchOptions& options) {
  if (from.ambient_dim != to.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "cones differ in dimension");
  }
  const int dim = from.ambient_dim;
  Decoder decode = [dim](const Vec& params) -> std::optional<std::pair<Matrix, Matrix>> {
    const Matrix a = Eigen::Map<const Matrix>(params.data(), dim, dim);
    Eigen::PartialPivLU<Matrix> lu(a);
    // Determinant guard relative to the scale of the entries.
    const double scale = a.norm() / std::sqrt(static_cast<double>(dim));
    if (!(std::abs(lu.determinant()) > 1e-10 * std::pow(scale, dim))) {
      return std::nullopt;
    }
    Matrix a_inverse = lu.inverse();
    if (!a_inverse.allFinite()) return std::nullopt;
    return std::make_pair(a, std::move(a_inverse));
  };
  Starter start = [&](int r, std::mt19937_64& rng) -> Vec {
    Matrix m = Matrix::Identity(dim, dim);
    if (r > 0) {
      if (r % 2 == 0) {
        const StructuredAutomorphism s = RandomAutomorphism(from, rng());
        m = s.ToMatrix() / s.alpha;
      }
      m += GaussianMatrix(dim, options.perturbation, rng);
    }
    return Eigen::Map<const Vec>(m.data(), m.size());
  };
  return RunSearch(from, to, options, decode, start);
}

std::vector<CandidateEigen> FourCandidatesCheck() {
  const double blocks[4][4] = {
      {-1, -1, -1, 1},
      {1, 1, 1, -1},
      {-1, 1, 1, 1},
      {1, -1, -1, -1},
  };
  std::vector<CandidateEigen> out;
  for (const auto& b : blocks) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = 1.0;
    m(1, 1) = b[0];
    m(1, 2) = b[1];
    m(2, 1) = b[2];
    m(2, 2) = b[3];
    Eigen::SelfAdjointEigenSolver<Matrix> eig(m, Eigen::EigenvaluesOnly);
    out.push_back({m, eig.eigenvalues().minCoeff()});
  }
  return out;
}

namespace {

bool SameDirection(const Vec& a, const Vec& b) {
  return (a / a.norm() - b / b.norm()).cwiseAbs().maxCoeff() <= 1e-12;
}

bool MapsExtremeRaysBijectively(const LinearMap& a, const ConeSpec& from,
                                const ConeSpec& to) {
  const std::vector<Ray> source = ExtremeRays(from);
  const std::vector<Ray> target = ExtremeRays(to);
  if (source.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (const Ray& ray : source) {
    const Vec image = a.matrix() * ray.direction.Stacked();
    if (!(image[0] > 0.0)) return false;
    bool matched = false;
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (!hit[k] && SameDirection(image, target[k].direction.Stacked())) {
        hit[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

IsoCertificate CertifyIso(const LinearMap& a, const ConeSpec& from,
                          const ConeSpec& to) {
  if (a.dim() != from.ambient_dim || a.dim() != to.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "map/cone dimension mismatch");
  }
  IsoCertificate cert;
  if (from.exponent.IsPolyhedral() && to.exponent.IsPolyhedral() &&
      MapsExtremeRaysBijectively(a, from, to)) {
    cert.exact_polyhedral = true;
    return cert;
  }
  cert.violation = Violation(a, from, to, 1000, 42);
  return cert;
}

}  // namespace pcone
