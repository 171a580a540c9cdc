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

#include <map>
#include <set>
#include <vector>

#include "zxpivot/diagram.hpp"

namespace zxp {

/**
 * A diagram state with only Z spiders, H boxes reduced to edge labels and
 * every output wired to its own spider. Carries no scalar.
 */
struct GraphLikeView {
  std::map<VertexId, Phase> spiders;
  /** Simple set of H edges; no loops, no parallel edges. */
  std::set<Edge> h_edges;
  /** outputs[i] is the spider plainly wired to output i. */
  std::vector<VertexId> outputs;
  /** The state is zero (a closed H cycle of odd length was dropped). */
  bool zero = false;

  std::vector<VertexId> neighbours(VertexId v) const;
};

/**
 * Colour-changes X spiders, fuses spiders joined by plain wires, cancels
 * parallel H edges in pairs, drops plain loops and turns each H self-loop
 * into a pi phase. Throws PreconditionError if d has inputs.
 */
GraphLikeView to_graph_like(const Diagram& d);

/** Diagram of the view: a Z spider per entry, an H box per h_edge. */
Diagram from_graph_like(const GraphLikeView& g);

}  // namespace zxp
