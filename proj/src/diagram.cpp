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

#include "zxpivot/diagram.hpp"

#include <algorithm>
#include <set>

#include "zxpivot/errors.hpp"

namespace zxp {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Z:
      return "Z";
    case Kind::X:
      return "X";
    case Kind::H:
      return "H";
    case Kind::B:
      return "B";
  }
  return "?";
}

Kind other_colour(Kind k) {
  if (k == Kind::Z) return Kind::X;
  if (k == Kind::X) return Kind::Z;
  throw PreconditionError("other_colour on a non-spider");
}

Diagram::Node& Diagram::node(VertexId v) {
  auto it = data_.find(v);
  if (it == data_.end())
    throw PreconditionError("unknown vertex " + std::to_string(v));
  return it->second;
}

const Diagram::Node& Diagram::node(VertexId v) const {
  auto it = data_.find(v);
  if (it == data_.end())
    throw PreconditionError("unknown vertex " + std::to_string(v));
  return it->second;
}

VertexId Diagram::next_id() const {
  return std::max(fresh_, data_.empty() ? 0 : data_.rbegin()->first + 1);
}

VertexId Diagram::add_vertex(Kind kind, Phase phase) {
  VertexId id = next_id();
  add_vertex_with_id(id, kind, phase);
  return id;
}

void Diagram::add_vertex_with_id(VertexId id, Kind kind, Phase phase) {
  if (data_.count(id))
    throw MalformedInput("duplicate vertex id " + std::to_string(id));
  if (kind == Kind::H || kind == Kind::B) phase = Phase();
  data_[id] = Node{Vertex{kind, phase}, {}};
  fresh_ = std::max(fresh_, id + 1);
}

VertexId Diagram::add_input() {
  VertexId v = add_vertex(Kind::B);
  inputs_.push_back(v);
  return v;
}

VertexId Diagram::add_output() {
  VertexId v = add_vertex(Kind::B);
  outputs_.push_back(v);
  return v;
}

void Diagram::add_edge(VertexId a, VertexId b) {
  Node& na = node(a);
  node(b);
  na.nbrs.push_back(b);
  node(b).nbrs.push_back(a);
}

void Diagram::remove_edge(VertexId a, VertexId b) {
  auto drop = [&](Node& n, VertexId target) {
    auto it = std::find(n.nbrs.begin(), n.nbrs.end(), target);
    if (it == n.nbrs.end())
      throw PreconditionError("no edge " + std::to_string(a) + "-" +
                              std::to_string(b));
    n.nbrs.erase(it);
  };
  if (a == b && edge_count(a, a) == 0)
    throw PreconditionError("no loop on " + std::to_string(a));
  drop(node(a), b);
  drop(node(b), a);
}

void Diagram::remove_vertex(VertexId v) {
  std::vector<VertexId> nbrs = node(v).nbrs;
  for (VertexId n : nbrs) {
    if (n == v) continue;
    Node& nn = node(n);
    nn.nbrs.erase(std::find(nn.nbrs.begin(), nn.nbrs.end(), v));
  }
  data_.erase(v);
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

void Diagram::splice(VertexId v) {
  std::vector<VertexId> nbrs = node(v).nbrs;
  if (nbrs.size() != 2)
    throw PreconditionError("splice needs a degree-2 vertex");
  if (nbrs[0] == v && nbrs[1] == v) {
    remove_vertex(v);
    VertexId s = add_vertex(Kind::Z);
    add_edge(s, s);
    return;
  }
  remove_vertex(v);
  VertexId n1 = nbrs[0], n2 = nbrs[1];
  if (n1 == n2 && kind(n1) == Kind::H) {
    // a closed loop through a single H box: rebuild as an H-looped spider
    remove_vertex(n1);
    VertexId s = add_vertex(Kind::Z);
    VertexId h = add_vertex(Kind::H);
    add_edge(s, h);
    add_edge(s, h);
    return;
  }
  add_edge(n1, n2);
}

VertexId Diagram::insert_on_edge(VertexId a, VertexId b, Kind kind,
                                 Phase phase) {
  remove_edge(a, b);
  VertexId n = add_vertex(kind, phase);
  add_edge(a, n);
  add_edge(n, b);
  return n;
}

const Vertex& Diagram::vertex(VertexId v) const { return node(v).v; }

void Diagram::set_phase(VertexId v, Phase p) {
  Node& n = node(v);
  if (!is_spider(n.v.kind))
    throw PreconditionError("phase on a non-spider vertex");
  n.v.phase = p;
}

void Diagram::set_kind(VertexId v, Kind k) {
  Node& n = node(v);
  n.v.kind = k;
  if (!is_spider(k)) n.v.phase = Phase();
}

const std::vector<VertexId>& Diagram::neighbours(VertexId v) const {
  return node(v).nbrs;
}

std::vector<VertexId> Diagram::adjacent(VertexId v) const {
  std::set<VertexId> s(node(v).nbrs.begin(), node(v).nbrs.end());
  s.erase(v);
  return {s.begin(), s.end()};
}

int Diagram::edge_count(VertexId a, VertexId b) const {
  const auto& nb = node(a).nbrs;
  int c = static_cast<int>(std::count(nb.begin(), nb.end(), b));
  return a == b ? c / 2 : c;
}

std::vector<VertexId> Diagram::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(data_.size());
  for (const auto& [id, _] : data_) out.push_back(id);
  return out;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  for (const auto& [id, n] : data_) {
    int loops = 0;
    for (VertexId m : n.nbrs) {
      if (m > id) out.emplace_back(id, m);
      if (m == id) ++loops;
    }
    for (int i = 0; i < loops / 2; ++i) out.emplace_back(id, id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Diagram::edge_total() const {
  std::size_t ends = 0;
  for (const auto& [_, n] : data_) ends += n.nbrs.size();
  return ends / 2;
}

bool Diagram::operator==(const Diagram& other) const {
  if (inputs_ != other.inputs_ || outputs_ != other.outputs_) return false;
  if (data_.size() != other.data_.size()) return false;
  for (auto it = data_.begin(), jt = other.data_.begin(); it != data_.end();
       ++it, ++jt) {
    if (it->first != jt->first || !(it->second.v == jt->second.v))
      return false;
    auto a = it->second.nbrs, b = jt->second.nbrs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return true;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> out;
  std::map<VertexId, int> in_count, out_count, listed;
  for (VertexId v : d.inputs()) ++in_count[v], ++listed[v];
  for (VertexId v : d.outputs()) ++out_count[v], ++listed[v];
  for (const auto& [v, _] : listed) {
    if (in_count[v] && out_count[v])
      out.push_back("vertex " + std::to_string(v) +
                    " is both an input and an output");
    if (in_count[v] > 1 || out_count[v] > 1)
      out.push_back("vertex " + std::to_string(v) + " listed twice");
    if (!d.has_vertex(v))
      out.push_back("boundary entry " + std::to_string(v) +
                    " is not a vertex");
    else if (d.kind(v) != Kind::B)
      out.push_back("boundary entry " + std::to_string(v) +
                    " is not a boundary vertex");
  }
  for (VertexId v : d.vertex_ids()) {
    const Vertex& vx = d.vertex(v);
    int deg = d.degree(v);
    switch (vx.kind) {
      case Kind::B:
        if (!listed.count(v))
          out.push_back("boundary vertex " + std::to_string(v) +
                        " is neither input nor output");
        if (deg != 1)
          out.push_back("boundary vertex " + std::to_string(v) +
                        " has degree " + std::to_string(deg));
        break;
      case Kind::H:
        if (deg != 2)
          out.push_back("H vertex " + std::to_string(v) + " has degree " +
                        std::to_string(deg));
        else if (d.loop_count(v) > 0)
          out.push_back("H vertex " + std::to_string(v) + " has a self-loop");
        break;
      default:
        break;
    }
  }
  return out;
}

void require_valid(const Diagram& d) {
  auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "malformed diagram:";
  for (const auto& s : v) msg += " " + s + ";";
  throw MalformedInput(msg);
}

Diagram renumber(const Diagram& d, VertexId offset) {
  Diagram r;
  for (VertexId v : d.vertex_ids())
    r.add_vertex_with_id(v + offset, d.kind(v), d.phase(v));
  for (const Edge& e : d.edges()) r.add_edge(e.a + offset, e.b + offset);
  for (VertexId v : d.inputs()) r.declare_input(v + offset);
  for (VertexId v : d.outputs()) r.declare_output(v + offset);
  return r;
}

Diagram compact_ids(const Diagram& d) {
  std::map<VertexId, VertexId> m;
  Diagram r;
  for (VertexId v : d.vertex_ids()) {
    VertexId id = static_cast<VertexId>(m.size());
    m[v] = id;
    r.add_vertex_with_id(id, d.kind(v), d.phase(v));
  }
  for (const Edge& e : d.edges()) r.add_edge(m[e.a], m[e.b]);
  for (VertexId v : d.inputs()) r.declare_input(m[v]);
  for (VertexId v : d.outputs()) r.declare_output(m[v]);
  return r;
}

namespace {

// Adds the vertices and edges of g to r, shifted by offset.
void absorb(Diagram& r, const Diagram& g, VertexId offset) {
  for (VertexId v : g.vertex_ids())
    r.add_vertex_with_id(v + offset, g.kind(v), g.phase(v));
  for (const Edge& e : g.edges()) r.add_edge(e.a + offset, e.b + offset);
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.num_outputs() != g.num_inputs())
    throw PreconditionError(
        "compose: " + std::to_string(f.num_outputs()) + " outputs vs " +
        std::to_string(g.num_inputs()) + " inputs");
  Diagram r = f;
  VertexId offset = f.next_id();
  absorb(r, g, offset);
  std::vector<VertexId> joins_f = f.outputs();
  r.outputs().clear();
  for (VertexId v : g.outputs()) r.declare_output(v + offset);
  std::vector<VertexId> erased;
  for (std::size_t i = 0; i < joins_f.size(); ++i) {
    VertexId bi = g.inputs()[i] + offset;
    r.add_edge(joins_f[i], bi);
    erased.push_back(joins_f[i]);
    erased.push_back(bi);
  }
  for (VertexId w : erased) r.splice(w);
  return r;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  Diagram r = f;
  VertexId offset = f.next_id();
  absorb(r, g, offset);
  for (VertexId v : g.inputs()) r.declare_input(v + offset);
  for (VertexId v : g.outputs()) r.declare_output(v + offset);
  return r;
}

Diagram bend_inputs(const Diagram& d) {
  Diagram r = d;
  for (VertexId v : d.inputs()) r.declare_output(v);
  r.inputs().clear();
  return r;
}

Diagram color_swap(const Diagram& d) {
  Diagram r = d;
  for (VertexId v : r.vertex_ids())
    if (is_spider(r.kind(v))) r.set_kind(v, other_colour(r.kind(v)));
  return r;
}

namespace diagrams {

Diagram empty() { return Diagram(); }

Diagram wire() {
  Diagram d;
  VertexId i = d.add_input();
  VertexId o = d.add_output();
  d.add_edge(i, o);
  return d;
}

Diagram hadamard() {
  Diagram d;
  VertexId i = d.add_input();
  VertexId h = d.add_vertex(Kind::H);
  VertexId o = d.add_output();
  d.add_edge(i, h);
  d.add_edge(h, o);
  return d;
}

Diagram spider(Kind kind, int n, int m, Phase phase) {
  Diagram d;
  VertexId s = d.add_spider(kind, phase);
  for (int i = 0; i < n; ++i) d.add_edge(d.add_input(), s);
  for (int i = 0; i < m; ++i) d.add_edge(s, d.add_output());
  return d;
}

Diagram cz() {
  Diagram d;
  VertexId i0 = d.add_input(), i1 = d.add_input();
  VertexId a = d.add_spider(Kind::Z), b = d.add_spider(Kind::Z);
  VertexId h = d.add_vertex(Kind::H);
  VertexId o0 = d.add_output(), o1 = d.add_output();
  d.add_edge(i0, a);
  d.add_edge(a, o0);
  d.add_edge(i1, b);
  d.add_edge(b, o1);
  d.add_edge(a, h);
  d.add_edge(h, b);
  return d;
}

Diagram swap() {
  Diagram d;
  VertexId i0 = d.add_input(), i1 = d.add_input();
  VertexId o0 = d.add_output(), o1 = d.add_output();
  d.add_edge(i0, o1);
  d.add_edge(i1, o0);
  return d;
}

Diagram identity(int n) {
  Diagram d;
  for (int k = 0; k < n; ++k) d = tensor(d, wire());
  return d;
}

}  // namespace diagrams

}  // namespace zxp
