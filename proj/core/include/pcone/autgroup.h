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

#ifndef PCONE_AUTGROUP_H_
#define PCONE_AUTGROUP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcone/cone.h"
#include "pcone/linear_map.h"
#include "pcone/types.h"

namespace pcone {

// A signed permutation matrix P with P(i, perm[i]) = signs[i], so
// (P x)_i = signs[i] * x[perm[i]]. Indices are 0-based.
class GeneralizedPermutation {
 public:
  // Throws kInvalidArgument unless perm is a bijection of {0..n-1} and every
  // sign is +1 or -1.
  static GeneralizedPermutation Create(std::vector<int> perm,
                                       std::vector<int> signs);
  static GeneralizedPermutation Identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  Vec Apply(const Vec& x) const;
  Matrix ToMatrix() const;

  // (this * other) as matrices.
  GeneralizedPermutation Compose(const GeneralizedPermutation& other) const;
  GeneralizedPermutation Inverse() const;

  // Row of P x that carries x_i: the k with perm[k] == i. This is the
  // permutation acting on coordinate indices.
  int ImageIndex(int i) const;

  friend bool operator==(const GeneralizedPermutation&,
                         const GeneralizedPermutation&) = default;

 private:
  GeneralizedPermutation(std::vector<int> perm, std::vector<int> signs)
      : perm_(std::move(perm)), signs_(std::move(signs)) {}

  std::vector<int> perm_;
  std::vector<int> signs_;
};

// alpha * diag(1, P) with alpha > 0: the general form of an automorphism of
// K_p for p != 2.
struct StructuredAutomorphism {
  double alpha = 1.0;
  GeneralizedPermutation gp = GeneralizedPermutation::Identity(1);

  // Throws kInvalidArgument unless alpha > 0.
  static StructuredAutomorphism Make(double alpha, GeneralizedPermutation gp);

  int ambient_dim() const { return gp.size() + 1; }
  Matrix ToMatrix() const;
  LinearMap ToLinearMap() const;
  StructuredAutomorphism Compose(const StructuredAutomorphism& other) const;
  StructuredAutomorphism Inverse() const;
};

// Index shuffle and sign flips; no dense multiply.
ConePoint Apply(const StructuredAutomorphism& a, const ConePoint& z);
ConePoint Apply(const LinearMap& a, const ConePoint& z);

// Recovers (alpha, P) when A = alpha diag(1, P) entrywise within tol * alpha,
// with alpha = A(0,0) > 0. For p != 2 this is exact membership in Aut(K_p).
// Throws kUnsupportedExponent for p = 2 and kDimensionMismatch when the map
// and cone disagree on dimension.
std::optional<StructuredAutomorphism> IsStructuralAutomorphism(
    const LinearMap& a, const ConeSpec& spec, double tol);

struct LoewySchneiderResult {
  bool aut_or_neg_aut = false;  // A K_2 = K_2 or A K_2 = -K_2
  double mu = 0.0;              // (A^T J A)(0,0)
  bool preserves_cone = false;  // A K_2 = K_2 (image of the main axis has t > 0)
};

// A^T J A = mu J with J = diag(1, -1, ..., -1), tested as
// ||A^T J A - mu J||_max <= tol * mu for mu = (A^T J A)(0,0) > 0.
LoewySchneiderResult LoewySchneider(const LinearMap& a, double tol);

// One-sided automorphism test: a witness is a boundary point of K_p whose
// image or preimage falls outside K_p by more than tol * (1 + ||w||_2).
struct OracleVerdict {
  std::optional<ConePoint> witness;
  bool witness_from_inverse = false;

  bool plausible() const { return !witness.has_value(); }
};

OracleVerdict SamplingOracleAutomorphism(const LinearMap& a, const ConeSpec& spec,
                                         int samples, std::uint64_t seed,
                                         double tol);
// Same test over a caller-supplied net of boundary points.
OracleVerdict SamplingOracleAutomorphism(const LinearMap& a, const ConeSpec& spec,
                                         std::span<const ConePoint> net,
                                         double tol);

// Uniform permutation (Fisher-Yates), i.i.d. signs, log-uniform alpha in
// [0.1, 10]. Deterministic per seed.
StructuredAutomorphism RandomAutomorphism(const ConeSpec& spec, std::uint64_t seed);

struct HomogeneityResult {
  std::optional<StructuredAutomorphism> map;  // set when reachable

  bool reachable() const { return map.has_value(); }
};

// Whether some alpha diag(1, P) sends (1, 0, ..., 0) to `target`. The image
// of the main axis is always (alpha, 0, ..., 0), so this reduces to
// ||target.x||_inf <= tol * target.t. Throws kUnsupportedExponent for p = 2
// and kNotInterior unless the target lies strictly inside K_p.
HomogeneityResult HomogeneityProbe(const ConeSpec& spec, const ConePoint& target,
                                   double tol);

}  // namespace pcone

#endif  // PCONE_AUTGROUP_H_
