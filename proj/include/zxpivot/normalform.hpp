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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxpivot/dense.hpp"
#include "zxpivot/diagram.hpp"
#include "zxpivot/graph.hpp"

namespace zxp {

/** The four operators allowed in a reduced GS-RLC diagram. */
enum class RealLocalOp { I, Z, H, HZ };

/** H^h X^x Z^z, a real single-qubit Clifford up to sign. */
struct RealClifford {
  bool h = false;
  bool x = false;
  bool z = false;

  /** this * Z, this * X and this * H, all up to sign. */
  RealClifford then_z() const { return {h, x, !z}; }
  RealClifford then_x() const { return {h, !x, z}; }
  RealClifford then_h() const { return {!h, z, x}; }

  std::optional<RealLocalOp> local_op() const;
  /** "I" or the letters of H, X, Z present, in that order. */
  std::string str() const;
  static RealClifford parse(const std::string& s);
  DenseMatrix matrix() const;
  bool operator==(const RealClifford&) const = default;
};

std::string local_op_name(RealLocalOp op);

/**
 * Graph state on the output qubits with a real local Clifford on each
 * output. Labels are the graph vertices in output order.
 */
struct GsRlcDiagram {
  SimpleGraph graph;
  std::map<std::string, RealClifford> ops;
  bool reduced = false;
  /** The represented state is zero; graph and ops are then meaningless. */
  bool zero = false;

  std::vector<std::string> labels() const { return graph.vertices(); }
  bool operator==(const GsRlcDiagram&) const = default;
};

/** Output labels "q0", "q1", ... zero padded when n > 10. */
std::vector<std::string> qubit_labels(int n);

bool is_angle_free(const Diagram& d);
/** All spider phases are 0 or pi. */
bool is_real(const Diagram& d);
/** Replaces each pi phase by an H self-loop on the same spider. */
Diagram encode_angle_free(const Diagram& d);
/** Replaces each H self-loop on a spider by a pi phase. */
Diagram decode_angle_free(const Diagram& d);

/** Diagram of g: graph-state diagram with the ops inserted on outputs. */
Diagram gs_rlc_diagram(const GsRlcDiagram& g);
/** Dense state built from graph_state_vector and the op matrices. */
DenseMatrix gs_rlc_vector(const GsRlcDiagram& g);

/**
 * Brings a real (or angle-free) diagram state into GS-RLC form: graph-like
 * view, then interior spiders removed by a Z-basis projection, after a
 * pivot with their smallest-label neighbour when they are X-basis effects.
 * Throws PreconditionError for inputs or non-real phases.
 */
GsRlcDiagram to_gs_rlc(const Diagram& d);

/** Pushes X through the graph and pivots away adjacent H pairs. */
GsRlcDiagram reduce(const GsRlcDiagram& g);
bool is_reduced(const GsRlcDiagram& g);

/** Pivots until no qubit pair has H crossed between the two diagrams. */
std::pair<GsRlcDiagram, GsRlcDiagram> simplify_pair(const GsRlcDiagram& a,
                                                    const GsRlcDiagram& b);
bool is_simplified_pair(const GsRlcDiagram& a, const GsRlcDiagram& b);

struct DecideResult {
  bool equal = false;
  std::optional<std::pair<GsRlcDiagram, GsRlcDiagram>> witness;
  std::string reason;
};

/**
 * Decides equality up to a nonzero scalar of two real diagrams; inputs
 * are bent into outputs first. Arity mismatches are unequal.
 */
DecideResult decide_equal(const Diagram& a, const Diagram& b);

struct CircuitOptions {
  int qubits = 3;
  int depth = 8;
  /** Extra wires prepared and later projected onto <0|. */
  int projected = 0;
  /** Chance that a wire starts in |0> instead of |+>. */
  double zero_prep = 0.25;
};

/** Random real stabilizer state from {Z, H, CZ} circuits. */
Diagram random_circuit_state(const CircuitOptions& opts, std::uint64_t seed);

}  // namespace zxp
