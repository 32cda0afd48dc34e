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

#ifndef PCONE_DUALITY_H_
#define PCONE_DUALITY_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "pcone/cone.h"
#include "pcone/linear_map.h"
#include "pcone/types.h"

namespace pcone {

// Symmetric positive definite A = L L^T from a lower-triangular L whose
// diagonal is stored as logs, so every parameter vector yields a PD matrix.
// Parameter layout: dim log-diagonal entries, then the strictly lower part
// row by row.
class PdFactor {
 public:
  static int ParamCount(int dim) { return dim * (dim + 1) / 2; }
  // Throws kInvalidArgument when params.size() != ParamCount(dim).
  static PdFactor FromParams(int dim, std::span<const double> params);
  // Cholesky factor of a symmetric PD matrix; throws kInvalidArgument if the
  // matrix is not PD.
  static PdFactor FromMatrix(const Matrix& spd);

  int dim() const { return static_cast<int>(lower_.rows()); }
  const Matrix& lower() const { return lower_; }
  Matrix Reconstruct() const { return lower_ * lower_.transpose(); }
  // A^-1 = L^-T L^-1 via triangular solves.
  Matrix ReconstructInverse() const;
  Vec Params() const;

 private:
  explicit PdFactor(Matrix lower) : lower_(std::move(lower)) {}
  Matrix lower_;
};

enum class Aggregation { kMax, kMean };

const char* AggregationName(Aggregation a);

// Frozen boundary samples of the source and target cones. The source net is
// drawn with `seed`, the target net with `seed + 1`.
struct SampleNet {
  ConeSpec from;
  ConeSpec to;
  std::uint64_t seed = 0;
  Matrix from_points;  // ambient_dim x samples, columns are [t, x]
  Matrix to_points;

  static SampleNet Make(const ConeSpec& from, const ConeSpec& to, int samples,
                        std::uint64_t seed);
  int samples() const { return static_cast<int>(from_points.cols()); }
};

// max(0, ||u||_q - t) / ||(t, u)||_2 for w = (t, u) != 0 and cone K_q.
double Defect(const ConeSpec& cone, const ConePoint& w);

// Aggregated defect of A over the source net (forward images checked against
// `to`) and of A^-1 over the target net (checked against `from`). Zero for
// exact isomorphisms. Throws kDimensionMismatch.
double Violation(const Matrix& a, const Matrix& a_inverse, const SampleNet& net,
                 Aggregation aggregation = Aggregation::kMax);
double Violation(const LinearMap& a, const ConeSpec& from, const ConeSpec& to,
                 int samples, std::uint64_t seed,
                 Aggregation aggregation = Aggregation::kMax);

enum class SearchVerdict { kFoundIso, kNoIsoFound };

const char* SearchVerdictName(SearchVerdict v);

struct SearchOptions {
  int restarts = 50;
  int samples = 1000;
  std::uint64_t seed = 42;
  // Metric evaluations in total. Half is split evenly between the restarts,
  // the remainder refines the best restart.
  int budget = 20000;
  Aggregation aggregation = Aggregation::kMax;
  // FoundIso iff best_violation <= accept_threshold.
  double accept_threshold = 1e-9;
  // Standard deviation of the Gaussian perturbation of restart points.
  double perturbation = 0.5;
};

// Default options for iso_search: accept_threshold 1e-6, the accuracy a
// search over general 9- to 16-parameter maps can certify.
SearchOptions DefaultIsoSearchOptions();

struct IsoSearchReport {
  LinearMap best_map = LinearMap::Identity(2);
  double best_violation = 0.0;
  int restarts = 0;      // configured
  int restarts_run = 0;  // stops early once a restart meets the threshold
  int samples_per_eval = 0;
  std::uint64_t seed = 0;
  int evaluations = 0;
  double accept_threshold = 0.0;
  SearchVerdict verdict = SearchVerdict::kNoIsoFound;
  // NoIsoFound with best_violation in (threshold, 100 * threshold]: too close
  // to call.
  bool in_hysteresis_band = false;
  std::vector<double> restart_violations;
  // Result of the refinement phase; NaN when it did not run.
  double polished_violation = std::numeric_limits<double>::quiet_NaN();
};

// Multi-start simplex search for a symmetric PD A with A K_p = K_q, q the
// conjugate. Such an A exists iff K_p is self-dual under some inner product.
IsoSearchReport SelfDualSearch(const ConeSpec& spec, const SearchOptions& options);

// Same engine over general invertible maps K_p -> K_q. Throws
// kDimensionMismatch when the cones differ in dimension.
IsoSearchReport IsoSearch(const ConeSpec& from, const ConeSpec& to,
                          const SearchOptions& options);

struct CandidateEigen {
  Matrix matrix;
  double min_eigenvalue = 0.0;
};

// The four symmetric matrices B C (alpha = 1) that a PD isomorphism
// K_1^3 -> K_inf^3 would have to equal, with their smallest eigenvalues.
std::vector<CandidateEigen> FourCandidatesCheck();

struct IsoCertificate {
  bool exact_polyhedral = false;
  // Sampled violation when no exact certificate applies; 0 otherwise.
  double violation = 0.0;
};

// For polyhedral cones, checks exactly that A maps the extreme rays of
// `from` bijectively onto those of `to` up to positive scaling. Otherwise, or
// when that check fails, reports the sampled violation (1000 samples,
// seed 42).
IsoCertificate CertifyIso(const LinearMap& a, const ConeSpec& from,
                          const ConeSpec& to);

}  // namespace pcone

#endif  // PCONE_DUALITY_H_
