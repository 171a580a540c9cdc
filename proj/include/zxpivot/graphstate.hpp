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
#include <optional>
#include <string>
#include <vector>

#include "zxpivot/dense.hpp"
#include "zxpivot/diagram.hpp"
#include "zxpivot/graph.hpp"

namespace zxp {

/** Single-qubit gates usable in a local operator word. */
enum class Gate { Z, X, H, ZPlus, ZMinus, XPlus, XMinus };

std::string gate_name(Gate g);
/** 2x2 matrix of the gate, as the corresponding diagram interprets. */
DenseMatrix gate_matrix(Gate g);

/**
 * Per-vertex gate sequences; the first gate of a sequence acts first.
 * Sequences on different vertices commute.
 */
struct LocalOpWord {
  std::map<std::string, std::vector<Gate>> ops;
  void push(const std::string& v, Gate g) { ops[v].push_back(g); }
};

/** A diagram state whose outputs carry graph vertex labels. */
struct LabelledState {
  Diagram diagram;
  /** labels[i] names output i. */
  std::vector<std::string> labels;
};

/**
 * One Z(0) spider per vertex wired to its own output and one H box per
 * edge. Outputs follow sorted label order.
 */
LabelledState graph_state_diagram(const SimpleGraph& g);

/** Inserts the gates of w on the matching outputs. */
LabelledState apply_local_ops(const LabelledState& s, const LocalOpWord& w);

/** Matrix of w on the qubits named by labels (first label is the MSB). */
DenseMatrix word_matrix(const LocalOpWord& w,
                        const std::vector<std::string>& labels);

/** K_v = X_v prod_{u in N(v)} Z_u. */
LocalOpWord stabilizer_word(const SimpleGraph& g, const std::string& v);
/** M_v = X(pi/2)_v prod_{u in N(v)} Z(-pi/2)_u. */
LocalOpWord vdn_word(const SimpleGraph& g, const std::string& v);
/** H_u H_v prod_{w in N(u) & N(v)} Z_w. */
LocalOpWord pivot_word(const SimpleGraph& g, const std::string& u,
                       const std::string& v);

/**
 * The checks compare interpretations as normalised vectors up to a global
 * phase: the diagram of a graph G interprets to |G> times a positive
 * factor that depends on the number of edges.
 */
bool check_stabilizer(const SimpleGraph& g, const std::string& v,
                      double tol = kDefaultTol);
bool check_vdn(const SimpleGraph& g, const std::string& v,
               double tol = kDefaultTol);
bool check_pivot_property(const SimpleGraph& g, const std::string& u,
                          const std::string& v, double tol = kDefaultTol);

/** Dense |G> (normalised), computed directly from the definition. */
DenseMatrix graph_state_vector(const SimpleGraph& g);

/**
 * Reads a graph back from a diagram in graph-state form: every output
 * attached to its own phase-0 Z spider, no other spiders, and spiders
 * joined only through single H boxes. Returns nullopt otherwise.
 */
std::optional<SimpleGraph> recognize_graph_state(
    const Diagram& d, const std::vector<std::string>& labels);

}  // namespace zxp
