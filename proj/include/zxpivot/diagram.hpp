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
#include <string>
#include <utility>
#include <vector>

#include "zxpivot/phase.hpp"

namespace zxp {

using VertexId = int;

enum class Kind { Z, X, H, B };

std::string kind_name(Kind k);
Kind other_colour(Kind k);
inline bool is_spider(Kind k) { return k == Kind::Z || k == Kind::X; }

struct Vertex {
  Kind kind = Kind::Z;
  Phase phase;
  bool operator==(const Vertex&) const = default;
};

/** Unordered vertex pair with a <= b. */
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  Edge() = default;
  Edge(VertexId x, VertexId y) : a(x < y ? x : y), b(x < y ? y : x) {}
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/**
 * Open multigraph over Z/X spiders, H boxes and boundary vertices, with
 * ordered input and output lists.
 *
 * Parallel edges and self-loops are kept as distinct edges. Vertex ids are
 * stable: rewrites only touch ids at the rewrite site, and fresh ids are
 * handed out in increasing order without reuse, so replaying a rewrite
 * sequence reproduces the same ids.
 */
class Diagram {
 public:
  Diagram() = default;

  VertexId add_vertex(Kind kind, Phase phase = {});
  VertexId add_spider(Kind kind, Phase phase = {}) {
    return add_vertex(kind, phase);
  }
  /** Adds a vertex with a caller-chosen id (used by the JSON reader). */
  void add_vertex_with_id(VertexId id, Kind kind, Phase phase = {});
  VertexId add_input();
  VertexId add_output();
  void declare_input(VertexId v) { inputs_.push_back(v); }
  void declare_output(VertexId v) { outputs_.push_back(v); }

  void add_edge(VertexId a, VertexId b);
  /** Removes one copy of the edge a-b; throws if absent. */
  void remove_edge(VertexId a, VertexId b);
  /** Removes v together with all incident edges and boundary entries. */
  void remove_vertex(VertexId v);
  /**
   * Removes a degree-2 vertex and joins its two neighbours. A vertex whose
   * only edge is a self-loop becomes a closed circle, represented as a
   * phase-0 Z spider with a self-loop.
   */
  void splice(VertexId v);
  /** Replaces one a-b edge by a-n-b for a fresh vertex n. */
  VertexId insert_on_edge(VertexId a, VertexId b, Kind kind, Phase phase = {});

  bool has_vertex(VertexId v) const { return data_.count(v) != 0; }
  const Vertex& vertex(VertexId v) const;
  Kind kind(VertexId v) const { return vertex(v).kind; }
  Phase phase(VertexId v) const { return vertex(v).phase; }
  void set_phase(VertexId v, Phase p);
  void set_kind(VertexId v, Kind k);

  /** Edge ends at v; a self-loop lists v twice. */
  const std::vector<VertexId>& neighbours(VertexId v) const;
  /** Distinct neighbours, excluding v itself. */
  std::vector<VertexId> adjacent(VertexId v) const;
  int degree(VertexId v) const {
    return static_cast<int>(neighbours(v).size());
  }
  int edge_count(VertexId a, VertexId b) const;
  int loop_count(VertexId v) const { return edge_count(v, v); }

  std::vector<VertexId> vertex_ids() const;
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const { return data_.size(); }
  std::size_t edge_total() const;
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  std::vector<VertexId>& inputs() { return inputs_; }
  std::vector<VertexId>& outputs() { return outputs_; }
  int num_inputs() const { return static_cast<int>(inputs_.size()); }
  int num_outputs() const { return static_cast<int>(outputs_.size()); }
  /**
   * Id the next added vertex receives. Ids of removed vertices are not
   * reused until reset_id_counter is called.
   */
  VertexId next_id() const;
  /** Lets next_id restart right after the largest live id. */
  void reset_id_counter() { fresh_ = 0; fresh_ = next_id(); }

  bool operator==(const Diagram& other) const;

 private:
  struct Node {
    Vertex v;
    std::vector<VertexId> nbrs;
  };
  Node& node(VertexId v);
  const Node& node(VertexId v) const;

  std::map<VertexId, Node> data_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  VertexId fresh_ = 0;
};

/** Returns the list of invariant violations; empty iff d is well formed. */
std::vector<std::string> validate(const Diagram& d);
/** Throws MalformedInput listing the violations, if any. */
void require_valid(const Diagram& d);

/** Sequential composition: g after f. Throws PreconditionError on arity. */
Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);
/** Inputs become outputs, appended after the existing outputs in order. */
Diagram bend_inputs(const Diagram& d);
Diagram color_swap(const Diagram& d);
/** Copy with every vertex id shifted by offset. */
Diagram renumber(const Diagram& d, VertexId offset);
/** Copy with vertex ids compacted to 0..n-1 in order of current id. */
Diagram compact_ids(const Diagram& d);

namespace diagrams {

Diagram empty();
Diagram wire();
Diagram hadamard();
/** Spider with n inputs and m outputs. */
Diagram spider(Kind kind, int n, int m, Phase phase = {});
/** Controlled-Z as two Z spiders joined through an H box. */
Diagram cz();
Diagram swap();
/** n parallel wires. */
Diagram identity(int n);

}  // namespace diagrams

}  // namespace zxp
