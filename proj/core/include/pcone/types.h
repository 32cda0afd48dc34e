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

#ifndef PCONE_TYPES_H_
#define PCONE_TYPES_H_

#include <Eigen/Dense>

namespace pcone {

using Vec = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace pcone

#endif  // PCONE_TYPES_H_
