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
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zxp {

/** Finite undirected simple graph with string labels. */
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(const std::vector<std::string>& vertices);

  void add_vertex(const std::string& v);
  /** Removes v and its edges; no-op for an unknown vertex. */
  void remove_vertex(const std::string& v);
  /** Throws PreconditionError on a loop or unknown vertex. */
  void add_edge(const std::string& a, const std::string& b);
  void remove_edge(const std::string& a, const std::string& b);
  void toggle_edge(const std::string& a, const std::string& b);

  bool has_vertex(const std::string& v) const { return adj_.count(v) != 0; }
  bool has_edge(const std::string& a, const std::string& b) const;
  const std::set<std::string>& neighbours(const std::string& v) const;

  /** Vertices in sorted order. */
  std::vector<std::string> vertices() const;
  /** Edges (a < b) in sorted order. */
  std::vector<std::pair<std::string, std::string>> edges() const;
  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::map<std::string, std::set<std::string>> adj_;
};

/** G*v: toggles every edge between two neighbours of v. */
SimpleGraph local_complement(const SimpleGraph& g, const std::string& v);

/**
 * G^uv for an edge uv. With A = N(u)\C, B = N(v)\C, C = N(u) & N(v), all
 * excluding u and v, toggles A x B, B x C and A x C, then exchanges the
 * labels u and v.
 */
SimpleGraph pivot(const SimpleGraph& g, const std::string& u,
                  const std::string& v);

/** Swaps the neighbourhoods of u and v. */
SimpleGraph swap_labels(const SimpleGraph& g, const std::string& u,
                        const std::string& v);

bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

/** Labels "v0", "v1", ... ; zero padded when n > 10. */
std::vector<std::string> default_labels(int n);

/** Every labelled graph on n vertices (n <= 7), optionally only connected. */
std::vector<SimpleGraph> all_graphs(int n, bool connected_only);

/** Erdos-Renyi graph with edge probability p, resampled until connected. */
SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng);

/** Random bipartite graph with parts of size a and b. */
SimpleGraph random_bipartite_graph(int a, int b, double p,
                                   std::mt19937_64& rng);

}  // namespace zxp
