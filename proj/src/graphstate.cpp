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

#include "zxpivot/graphstate.hpp"

#include <cmath>
#include <set>

#include "zxpivot/errors.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {

namespace {

struct GateShape {
  Kind kind;
  Phase phase;
};

GateShape shape(Gate g) {
  switch (g) {
    case Gate::Z: return {Kind::Z, Phase::pi()};
    case Gate::X: return {Kind::X, Phase::pi()};
    case Gate::H: return {Kind::H, Phase()};
    case Gate::ZPlus: return {Kind::Z, Phase(1, 2)};
    case Gate::ZMinus: return {Kind::Z, Phase(3, 2)};
    case Gate::XPlus: return {Kind::X, Phase(1, 2)};
    case Gate::XMinus: return {Kind::X, Phase(3, 2)};
  }
  return {Kind::H, Phase()};
}

bool same_ray(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.is_zero() || b.is_zero()) return false;
  return eq_up_to(a.normalized(), b.normalized(), EqMode::UpToPhase, tol)
      .equal;
}

}  // namespace

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::Z: return "Z";
    case Gate::X: return "X";
    case Gate::H: return "H";
    case Gate::ZPlus: return "Z(pi/2)";
    case Gate::ZMinus: return "Z(-pi/2)";
    case Gate::XPlus: return "X(pi/2)";
    case Gate::XMinus: return "X(-pi/2)";
  }
  return "?";
}

DenseMatrix gate_matrix(Gate g) {
  GateShape s = shape(g);
  if (s.kind == Kind::H) return interpret(diagrams::hadamard());
  return interpret(diagrams::spider(s.kind, 1, 1, s.phase));
}

LabelledState graph_state_diagram(const SimpleGraph& g) {
  LabelledState s;
  s.labels = g.vertices();
  std::map<std::string, VertexId> spider;
  for (const auto& v : s.labels) spider[v] = s.diagram.add_spider(Kind::Z);
  for (const auto& v : s.labels)
    s.diagram.add_edge(spider[v], s.diagram.add_output());
  for (const auto& [a, b] : g.edges()) {
    VertexId h = s.diagram.add_vertex(Kind::H);
    s.diagram.add_edge(spider[a], h);
    s.diagram.add_edge(h, spider[b]);
  }
  return s;
}

LabelledState apply_local_ops(const LabelledState& s, const LocalOpWord& w) {
  LabelledState r = s;
  for (const auto& [v, gates] : w.ops) {
    auto it = std::find(r.labels.begin(), r.labels.end(), v);
    if (it == r.labels.end())
      throw PreconditionError("no output labelled " + v);
    VertexId out = r.diagram.outputs()[it - r.labels.begin()];
    for (Gate g : gates) {
      VertexId inner = r.diagram.neighbours(out).front();
      GateShape sh = shape(g);
      r.diagram.insert_on_edge(inner, out, sh.kind, sh.phase);
    }
  }
  return r;
}

DenseMatrix word_matrix(const LocalOpWord& w,
                        const std::vector<std::string>& labels) {
  for (const auto& [v, gates] : w.ops)
    if (std::find(labels.begin(), labels.end(), v) == labels.end())
      throw PreconditionError("no qubit labelled " + v);
  DenseMatrix m = DenseMatrix::identity(0);
  for (const auto& v : labels) {
    DenseMatrix q = DenseMatrix::identity(1);
    auto it = w.ops.find(v);
    if (it != w.ops.end())
      for (Gate g : it->second) q = gate_matrix(g) * q;
    m = kron(m, q);
  }
  return m;
}

LocalOpWord stabilizer_word(const SimpleGraph& g, const std::string& v) {
  LocalOpWord w;
  w.push(v, Gate::X);
  for (const auto& u : g.neighbours(v)) w.push(u, Gate::Z);
  return w;
}

LocalOpWord vdn_word(const SimpleGraph& g, const std::string& v) {
  LocalOpWord w;
  w.push(v, Gate::XPlus);
  for (const auto& u : g.neighbours(v)) w.push(u, Gate::ZMinus);
  return w;
}

LocalOpWord pivot_word(const SimpleGraph& g, const std::string& u,
                       const std::string& v) {
  if (!g.has_edge(u, v))
    throw PreconditionError("pivot needs an edge " + u + "-" + v);
  LocalOpWord w;
  w.push(u, Gate::H);
  w.push(v, Gate::H);
  for (const auto& x : g.neighbours(u))
    if (x != v && g.has_edge(v, x)) w.push(x, Gate::Z);
  return w;
}

bool check_stabilizer(const SimpleGraph& g, const std::string& v,
                      double tol) {
  LabelledState s = graph_state_diagram(g);
  return same_ray(interpret(apply_local_ops(s, stabilizer_word(g, v)).diagram),
                  interpret(s.diagram), tol);
}

bool check_vdn(const SimpleGraph& g, const std::string& v, double tol) {
  LabelledState s = graph_state_diagram(g);
  return same_ray(interpret(apply_local_ops(s, vdn_word(g, v)).diagram),
                  interpret(graph_state_diagram(local_complement(g, v)).diagram),
                  tol);
}

bool check_pivot_property(const SimpleGraph& g, const std::string& u,
                          const std::string& v, double tol) {
  LabelledState s = graph_state_diagram(g);
  return same_ray(
      interpret(apply_local_ops(s, pivot_word(g, u, v)).diagram),
      interpret(graph_state_diagram(pivot(g, u, v)).diagram), tol);
}

DenseMatrix graph_state_vector(const SimpleGraph& g) {
  std::vector<std::string> labels = g.vertices();
  const std::size_t n = labels.size();
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[labels[i]] = n - 1 - i;
  DenseMatrix m(std::size_t{1} << n, 1);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (std::size_t x = 0; x < m.rows(); ++x) {
    int parity = 0;
    for (const auto& [a, b] : g.edges())
      parity ^= static_cast<int>((x >> pos[a]) & (x >> pos[b]) & 1);
    m(x, 0) = parity ? -amp : amp;
  }
  return m;
}

std::optional<SimpleGraph> recognize_graph_state(
    const Diagram& d, const std::vector<std::string>& labels) {
  if (d.num_inputs() != 0 ||
      labels.size() != static_cast<std::size_t>(d.num_outputs()))
    return std::nullopt;
  std::map<VertexId, std::string> owner;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    VertexId s = d.neighbours(d.outputs()[i]).front();
    if (d.kind(s) != Kind::Z || !d.phase(s).is_zero() || owner.count(s))
      return std::nullopt;
    owner[s] = labels[i];
  }
  SimpleGraph g(labels);
  for (VertexId v : d.vertex_ids()) {
    Kind k = d.kind(v);
    if (k == Kind::B) continue;
    if (is_spider(k)) {
      if (!owner.count(v) || d.loop_count(v) != 0) return std::nullopt;
      for (VertexId n : d.neighbours(v))
        if (d.kind(n) != Kind::H && d.kind(n) != Kind::B) return std::nullopt;
      continue;
    }
    const auto& n = d.neighbours(v);
    if (!owner.count(n[0]) || !owner.count(n[1]) || n[0] == n[1])
      return std::nullopt;
    const std::string& a = owner[n[0]];
    const std::string& b = owner[n[1]];
    if (g.has_edge(a, b)) return std::nullopt;
    g.add_edge(a, b);
  }
  return g;
}

}  // namespace zxp
