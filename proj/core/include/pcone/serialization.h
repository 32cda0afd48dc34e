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

#ifndef PCONE_SERIALIZATION_H_
#define PCONE_SERIALIZATION_H_

#include <nlohmann/json.hpp>

#include "pcone/autgroup.h"
#include "pcone/cone.h"
#include "pcone/duality.h"
#include "pcone/exponent.h"
#include "pcone/linear_map.h"

// JSON wire formats:
//   Exponent                a number >= 1 or the string "inf"
//   ConeSpec                {"p": <Exponent>, "dim": n+1}
//   ConePoint               [t, x_1, ..., x_n]
//   LinearMap               row-major nested arrays
//   StructuredAutomorphism  {"alpha": a, "perm": [...], "signs": [...]}
//   IsoSearchReport         all report fields, map as LinearMap
// Decoding failures throw pcone::Error with kInvalidArgument (or the error
// of the failed constructor, e.g. kSingularMatrix).
namespace pcone {

using Json = nlohmann::json;

Json ToJson(const Exponent& e);
Exponent ExponentFromJson(const Json& j);

Json ToJson(const ConeSpec& spec);
ConeSpec ConeSpecFromJson(const Json& j);

Json ToJson(const ConePoint& z);
ConePoint ConePointFromJson(const Json& j);

Json ToJson(const Vec& v);
Json ToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);

Json ToJson(const LinearMap& a);
LinearMap LinearMapFromJson(const Json& j);

Json ToJson(const StructuredAutomorphism& a);
StructuredAutomorphism StructuredAutomorphismFromJson(const Json& j);

Json ToJson(const IsoSearchReport& report);

}  // namespace pcone

#endif  // PCONE_SERIALIZATION_H_
