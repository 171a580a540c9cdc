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

#include <cstdint>
#include <string>

#include "zxpivot/graphstate.hpp"
#include "zxpivot/trace.hpp"

namespace zxp {

/**
 * The graph-state diagram of g with H inserted on the outputs of u and v
 * and Z(pi) on the output of every common neighbour.
 */
LabelledState pivot_input(const SimpleGraph& g, const std::string& u,
                          const std::string& v);

/**
 * Rewrites s (in the shape built by pivot_input, with u and v having no
 * common neighbour) into the graph-state diagram of the pivoted graph.
 * Uses PlainZX rules only.
 */
Trace derive_pivot_no_common(const LabelledState& s, const std::string& u,
                             const std::string& v, bool checked = true);

/**
 * As derive_pivot_no_common, for arbitrary u, v. Common neighbours are
 * split with the HL rule first, so the theory must contain HL; TheoryError
 * is raised otherwise when common neighbours exist.
 */
Trace derive_pivot(const LabelledState& s, const std::string& u,
                   const std::string& v, Theory theory = Theory::ZXPlusHL,
                   bool checked = true);

/** Z(0) with one input, one output and an H self-loop. */
Diagram h_loop_diagram();
/** Z(pi) with one input and one output. */
Diagram pi_rotation_diagram();

/** Seven-stage chain from the H-loop to the pi rotation using TP. */
Trace derive_hl_from_triangle_pivot(bool checked = true);
/** Four-stage chain from the H-loop to the pi rotation using EU. */
Trace derive_hl_from_eu(Theory theory = Theory::ZXPlusEU, bool checked = true);

/** Removes every pair of parallel H boxes between two Z spiders. */
void hopf_cleanup(Derivation& d, const std::string& stage);

/**
 * Fuses a connected single-colour diagram without H boxes into one spider
 * using S1 and S2.
 */
Trace reduce_single_colour(const Diagram& d, bool checked = true);

/**
 * Rewrites an H-free diagram with S1, S2 and HPF until no two spiders of
 * the same colour touch, no spider has a loop and spiders share at most one
 * edge.
 */
Trace reduce_to_bipartite(const Diagram& d, bool checked = true);

/**
 * Turns every spider of colour k into the other colour with H1 and cancels
 * adjacent H pairs with H2.
 */
Trace eliminate_colour(const Diagram& d, Kind k, bool checked = true);

bool is_single_spider(const Diagram& d);
bool is_simple_bipartite(const Diagram& d);

/** Random connected diagram of Z spiders, no H boxes. */
Diagram random_single_colour_diagram(std::uint64_t seed, int max_spiders = 6);
/** Random diagram of Z and X spiders with no H boxes. */
Diagram random_h_free_diagram(std::uint64_t seed, int max_spiders = 6);

}  // namespace zxp
