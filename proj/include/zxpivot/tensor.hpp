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

#include <vector>

#include "zxpivot/dense.hpp"

namespace zxp::tn {

/**
 * Dense tensor over binary indices. labels[j] addresses bit
 * (labels.size() - 1 - j) of the flat index. Labels are distinct.
 */
struct Tensor {
  std::vector<int> labels;
  std::vector<cplx> data;

  std::size_t rank() const { return labels.size(); }
};

enum class Exec { Serial, Parallel, Auto };

/**
 * Contracts a with b, summing over `summed` (labels present in both). Labels
 * shared but not summed are kept once. Result labels: a's kept labels in
 * order, then b's kept labels not already present.
 *
 * contract_serial is the reference; contract_parallel splits the output
 * index space across OpenMP threads and must agree with it exactly.
 */
Tensor contract_serial(const Tensor& a, const Tensor& b,
                       const std::vector<int>& summed);
Tensor contract_parallel(const Tensor& a, const Tensor& b,
                         const std::vector<int>& summed);
Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<int>& summed, Exec exec = Exec::Auto);

/** Sums label out of t. */
Tensor sum_out(const Tensor& t, int label);

/**
 * Contracts a whole network. Every label occurs in at most two tensors; a
 * label listed in `open` is never summed. Pairs are merged greedily by the
 * size of the merged tensor. The result carries the open labels that occur
 * in some tensor, in unspecified order.
 */
Tensor contract_network(std::vector<Tensor> tensors,
                        const std::vector<int>& open, Exec exec = Exec::Auto);

}  // namespace zxp::tn
