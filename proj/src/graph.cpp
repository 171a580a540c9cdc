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

#include "zxpivot/graph.hpp"

#include <cstdio>

#include "zxpivot/errors.hpp"

namespace zxp {

SimpleGraph::SimpleGraph(const std::vector<std::string>& vertices) {
  for (const auto& v : vertices) add_vertex(v);
}

void SimpleGraph::add_vertex(const std::string& v) { adj_[v]; }

void SimpleGraph::remove_vertex(const std::string& v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (const std::string& n : it->second) adj_[n].erase(v);
  adj_.erase(it);
}

void SimpleGraph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw PreconditionError("self-loop on " + a);
  if (!has_vertex(a) || !has_vertex(b))
    throw PreconditionError("edge " + a + "-" + b + " has an unknown end");
  adj_[a].insert(b);
  adj_[b].insert(a);
}

void SimpleGraph::remove_edge(const std::string& a, const std::string& b) {
  if (!has_edge(a, b)) throw PreconditionError("no edge " + a + "-" + b);
  adj_[a].erase(b);
  adj_[b].erase(a);
}

void SimpleGraph::toggle_edge(const std::string& a, const std::string& b) {
  if (has_edge(a, b))
    remove_edge(a, b);
  else
    add_edge(a, b);
}

bool SimpleGraph::has_edge(const std::string& a, const std::string& b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

const std::set<std::string>& SimpleGraph::neighbours(
    const std::string& v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw PreconditionError("unknown vertex " + v);
  return it->second;
}

std::vector<std::string> SimpleGraph::vertices() const {
  std::vector<std::string> out;
  for (const auto& [v, n] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<std::string, std::string>> SimpleGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [v, ns] : adj_)
    for (const auto& n : ns)
      if (v < n) out.emplace_back(v, n);
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t k = 0;
  for (const auto& [v, ns] : adj_) k += ns.size();
  return k / 2;
}

SimpleGraph local_complement(const SimpleGraph& g, const std::string& v) {
  std::vector<std::string> n(g.neighbours(v).begin(), g.neighbours(v).end());
  SimpleGraph r = g;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) r.toggle_edge(n[i], n[j]);
  return r;
}

SimpleGraph swap_labels(const SimpleGraph& g, const std::string& u,
                        const std::string& v) {
  auto rename = [&](const std::string& x) {
    return x == u ? v : x == v ? u : x;
  };
  SimpleGraph r(g.vertices());
  for (const auto& [a, b] : g.edges()) r.add_edge(rename(a), rename(b));
  return r;
}

SimpleGraph pivot(const SimpleGraph& g, const std::string& u,
                  const std::string& v) {
  if (!g.has_edge(u, v))
    throw PreconditionError("pivot needs an edge " + u + "-" + v);
  std::set<std::string> a, b, c;
  for (const auto& x : g.neighbours(u))
    if (x != v) (g.has_edge(v, x) ? c : a).insert(x);
  for (const auto& x : g.neighbours(v))
    if (x != u && !c.count(x)) b.insert(x);
  SimpleGraph r = g;
  auto cross = [&](const std::set<std::string>& p,
                   const std::set<std::string>& q) {
    for (const auto& x : p)
      for (const auto& y : q) r.toggle_edge(x, y);
  };
  cross(a, b);
  cross(b, c);
  cross(a, c);
  return swap_labels(r, u, v);
}

bool is_connected(const SimpleGraph& g) {
  if (g.size() == 0) return true;
  std::set<std::string> seen;
  std::vector<std::string> stack{g.vertices().front()};
  seen.insert(stack.front());
  while (!stack.empty()) {
    std::string x = stack.back();
    stack.pop_back();
    for (const auto& n : g.neighbours(x))
      if (seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == g.size();
}

bool is_bipartite(const SimpleGraph& g) {
  std::map<std::string, int> side;
  for (const auto& start : g.vertices()) {
    if (side.count(start)) continue;
    side[start] = 0;
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
      std::string x = stack.back();
      stack.pop_back();
      for (const auto& n : g.neighbours(x)) {
        auto it = side.find(n);
        if (it == side.end()) {
          side[n] = 1 - side[x];
          stack.push_back(n);
        } else if (it->second == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, n > 10 ? "v%02d" : "v%d", i);
    out.push_back(buf);
  }
  return out;
}

std::vector<SimpleGraph> all_graphs(int n, bool connected_only) {
  if (n < 0 || n > 7) throw PreconditionError("all_graphs supports n <= 7");
  std::vector<std::string> labels = default_labels(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    SimpleGraph g(labels);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) g.add_edge(labels[pairs[k].first],
                                    labels[pairs[k].second]);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

SimpleGraph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::string> labels = default_labels(n);
  std::bernoulli_distribution coin(p);
  for (;;) {
    SimpleGraph g(labels);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(labels[i], labels[j]);
    if (is_connected(g)) return g;
  }
}

SimpleGraph random_bipartite_graph(int a, int b, double p,
                                   std::mt19937_64& rng) {
  std::vector<std::string> labels = default_labels(a + b);
  std::bernoulli_distribution coin(p);
  SimpleGraph g(labels);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j)
      if (coin(rng)) g.add_edge(labels[i], labels[j]);
  return g;
}

}  // namespace zxp
