// Copyright 2026 The zxpivot Authors
//
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

#pragma once

#include "zxpivot/dense.hpp"
#include "zxpivot/diagram.hpp"
#include "zxpivot/tensor.hpp"

namespace zxp {

/**
 * Standard interpretation. Rows are indexed by outputs and columns by
 * inputs, the first boundary in each list being the most significant bit.
 * Closed components are multiplied in as scalars.
 */
DenseMatrix interpret(const Diagram& d, tn::Exec exec = tn::Exec::Auto);

/** interpret with every spider phase replaced by 0. */
DenseMatrix interpret_zero(const Diagram& d);

/**
 * Doubling functor. Boundary i becomes boundaries 2i and 2i+1; a Z spider
 * becomes Z(0) on the first copy and X(0) on the second, an X spider the
 * other way round, and an H box the swap of the two copies. Phase-0
 * spiders of degree 2 are spliced out of the result.
 */
Diagram flatten(const Diagram& d);

}  // namespace zxp
