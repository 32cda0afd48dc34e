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

#include "pcone/serialization.h"

#include <cmath>
#include <string>
#include <vector>

#include "pcone/error.h"

namespace pcone {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "malformed JSON: " + what);
}

double NumberAt(const Json& j, const char* what) {
  if (!j.is_number()) Malformed(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Json ToJson(const Exponent& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Exponent ExponentFromJson(const Json& j) {
  if (j.is_string()) return Exponent::Parse(j.get<std::string>());
  return Exponent::Finite(NumberAt(j, "p"));
}

Json ToJson(const ConeSpec& spec) {
  return Json{{"p", ToJson(spec.exponent)}, {"dim", spec.ambient_dim}};
}

ConeSpec ConeSpecFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("dim")) {
    Malformed("cone spec needs \"p\" and \"dim\"");
  }
  if (!j["dim"].is_number_integer()) Malformed("\"dim\" must be an integer");
  return ConeSpec::Make(ExponentFromJson(j["p"]), j["dim"].get<int>());
}

Json ToJson(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json ToJson(const ConePoint& z) { return ToJson(z.Stacked()); }

ConePoint ConePointFromJson(const Json& j) {
  if (!j.is_array() || j.size() < 2) Malformed("cone point must be [t, x...]");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = NumberAt(j[i], "entry");
  return ConePoint::FromStacked(v);
}

Json ToJson(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) Malformed("matrix must be a nested array");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) Malformed("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) Malformed("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = NumberAt(j[i][k], "entry");
  }
  return m;
}

Json ToJson(const LinearMap& a) { return ToJson(a.matrix()); }

LinearMap LinearMapFromJson(const Json& j) {
  return LinearMap::FromMatrix(MatrixFromJson(j));
}

Json ToJson(const StructuredAutomorphism& a) {
  return Json{{"alpha", a.alpha}, {"perm", a.gp.perm()}, {"signs", a.gp.signs()}};
}

StructuredAutomorphism StructuredAutomorphismFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("perm") ||
      !j.contains("signs")) {
    Malformed("automorphism needs \"alpha\", \"perm\" and \"signs\"");
  }
  std::vector<int> perm, signs;
  try {
    perm = j["perm"].get<std::vector<int>>();
    signs = j["signs"].get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    Malformed("\"perm\" and \"signs\" must be integer arrays");
  }
  return StructuredAutomorphism::Make(
      NumberAt(j["alpha"], "alpha"),
      GeneralizedPermutation::Create(std::move(perm), std::move(signs)));
}

Json ToJson(const IsoSearchReport& report) {
  return Json{
      {"best_map", ToJson(report.best_map)},
      {"best_violation", report.best_violation},
      {"restarts", report.restarts},
      {"restarts_run", report.restarts_run},
      {"samples_per_eval", report.samples_per_eval},
      {"seed", report.seed},
      {"evaluations", report.evaluations},
      {"accept_threshold", report.accept_threshold},
      {"verdict", SearchVerdictName(report.verdict)},
      {"in_hysteresis_band", report.in_hysteresis_band},
      {"restart_violations", report.restart_violations},
      {"polished_violation", std::isnan(report.polished_violation)
                                 ? Json(nullptr)
                                 : Json(report.polished_violation)},
  };
}

}  // namespace pcone
