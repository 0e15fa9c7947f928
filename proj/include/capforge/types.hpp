// capforge/types.hpp

// Copyright 2026 Capforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPFORGE_TYPES_HPP_
#define CAPFORGE_TYPES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace capforge {

// Row-major dense storage throughout; file formats and caches assume
// data() walks rows first.
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic, Eigen::RowMajor>;

using Real = double;
using MatX = Mat<Real>;
using VecX = Vec<Real>;
using RowVecX = RowVec<Real>;

using Index = Eigen::Index;

using TokenIds = std::vector<int32_t>;

enum class Mode { kTrain, kInfer };

}  // namespace capforge

#endif  // CAPFORGE_TYPES_HPP_
