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

#include "zxpivot/graphlike.hpp"

#include <numeric>

#include "zxpivot/errors.hpp"

namespace zxp {

namespace {

struct Segment {
  VertexId a, b;
  int boxes;
};

class UnionFind {
 public:
  VertexId find(VertexId v) {
    auto it = parent_.find(v);
    if (it == parent_.end() || it->second == v) return v;
    return it->second = find(it->second);
  }
  void join(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::map<VertexId, VertexId> parent_;
};

// Neighbour of the degree-2 vertex cur reached by leaving through the edge
// end that is not the one arriving from prev.
VertexId step(const Diagram& d, VertexId cur, VertexId prev) {
  const auto& n = d.neighbours(cur);
  return n[0] == prev ? n[1] : n[0];
}

}  // namespace

std::vector<VertexId> GraphLikeView::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (const Edge& e : h_edges) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  return out;
}

GraphLikeView to_graph_like(const Diagram& d) {
  if (d.num_inputs() != 0)
    throw PreconditionError("to_graph_like expects a diagram state");
  GraphLikeView g;
  std::vector<Segment> segments;
  std::set<VertexId> seen;
  for (VertexId h : d.vertex_ids()) {
    if (d.kind(h) != Kind::H || seen.count(h)) continue;
    seen.insert(h);
    const auto& n = d.neighbours(h);
    VertexId ends[2];
    int boxes = 1;
    bool cycle = false;
    for (int side = 0; side < 2 && !cycle; ++side) {
      VertexId prev = h, cur = n[side];
      while (d.kind(cur) == Kind::H) {
        if (cur == h) {
          cycle = true;
          break;
        }
        seen.insert(cur);
        ++boxes;
        VertexId next = step(d, cur, prev);
        prev = cur;
        cur = next;
      }
      ends[side] = cur;
    }
    if (cycle) {
      // The closed chain is the trace of a power of H.
      if (boxes % 2) g.zero = true;
      continue;
    }
    segments.push_back({ends[0], ends[1], boxes});
  }
  for (const Edge& e : d.edges())
    if (d.kind(e.a) != Kind::H && d.kind(e.b) != Kind::H)
      segments.push_back({e.a, e.b, 0});

  UnionFind uf;
  std::vector<std::pair<VertexId, VertexId>> h_pairs;
  std::map<VertexId, std::pair<VertexId, int>> attached;
  std::vector<Segment> wires;
  auto parity = [&](const Segment& s) {
    int p = s.boxes + (d.kind(s.a) == Kind::X) + (d.kind(s.b) == Kind::X);
    return p % 2;
  };
  for (const Segment& s : segments) {
    bool sa = is_spider(d.kind(s.a)), sb = is_spider(d.kind(s.b));
    int p = parity(s);
    if (sa && sb) {
      if (p)
        h_pairs.emplace_back(s.a, s.b);
      else
        uf.join(s.a, s.b);
    } else if (sa || sb) {
      VertexId out = sa ? s.b : s.a, sp = sa ? s.a : s.b;
      attached[out] = {sp, p};
    } else {
      wires.push_back({s.a, s.b, p});
    }
  }

  for (VertexId v : d.vertex_ids())
    if (is_spider(d.kind(v))) g.spiders[uf.find(v)] += d.phase(v);
  std::map<Edge, int> mult;
  for (auto [a, b] : h_pairs) {
    VertexId ra = uf.find(a), rb = uf.find(b);
    if (ra == rb)
      g.spiders[ra] += Phase::pi();
    else
      ++mult[Edge(ra, rb)];
  }
  for (auto [e, k] : mult)
    if (k % 2) g.h_edges.insert(e);

  VertexId fresh = d.next_id();
  auto spider = [&]() {
    g.spiders[fresh] = Phase();
    return fresh++;
  };
  // Joins the fresh spider w to r by an H edge (odd) or an H-Z-H path.
  auto link = [&](VertexId w, VertexId r, int p) {
    if (p) {
      g.h_edges.insert(Edge(w, r));
    } else {
      VertexId x = spider();
      g.h_edges.insert(Edge(w, x));
      g.h_edges.insert(Edge(x, r));
    }
  };
  std::map<VertexId, VertexId> owner;
  std::set<VertexId> claimed;
  for (VertexId o : d.outputs()) {
    auto it = attached.find(o);
    if (it == attached.end()) continue;
    auto [sp, p] = it->second;
    VertexId r = uf.find(sp);
    if (!p && !claimed.count(r)) {
      claimed.insert(r);
      owner[o] = r;
      continue;
    }
    VertexId w = spider();
    link(w, r, p);
    owner[o] = w;
  }
  for (const Segment& s : wires) {
    VertexId w1 = spider(), w2 = spider();
    link(w1, w2, s.boxes);
    owner[s.a] = w1;
    owner[s.b] = w2;
  }
  for (VertexId o : d.outputs()) g.outputs.push_back(owner.at(o));
  return g;
}

Diagram from_graph_like(const GraphLikeView& g) {
  Diagram d;
  for (const auto& [v, p] : g.spiders) d.add_vertex_with_id(v, Kind::Z, p);
  for (const Edge& e : g.h_edges) {
    VertexId h = d.add_vertex(Kind::H);
    d.add_edge(e.a, h);
    d.add_edge(h, e.b);
  }
  for (VertexId s : g.outputs) d.add_edge(s, d.add_output());
  return d;
}

}  // namespace zxp
