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

#include "zxpivot/normalform.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "zxpivot/errors.hpp"
#include "zxpivot/graphlike.hpp"
#include "zxpivot/graphstate.hpp"

namespace zxp {

std::optional<RealLocalOp> RealClifford::local_op() const {
  if (x) return std::nullopt;
  if (h) return z ? RealLocalOp::HZ : RealLocalOp::H;
  return z ? RealLocalOp::Z : RealLocalOp::I;
}

std::string RealClifford::str() const {
  std::string s;
  if (h) s += 'H';
  if (x) s += 'X';
  if (z) s += 'Z';
  return s.empty() ? "I" : s;
}

RealClifford RealClifford::parse(const std::string& s) {
  if (s == "I") return {};
  static const std::string order = "HXZ";
  RealClifford c;
  std::size_t pos = 0;
  for (char ch : s) {
    std::size_t at = order.find(ch, pos);
    if (at == std::string::npos)
      throw MalformedInput("bad local operator '" + s + "'");
    (at == 0 ? c.h : at == 1 ? c.x : c.z) = true;
    pos = at + 1;
  }
  if (s.empty()) throw MalformedInput("empty local operator");
  return c;
}

DenseMatrix RealClifford::matrix() const {
  DenseMatrix m = DenseMatrix::identity(1);
  if (h) m = m * gate_matrix(Gate::H);
  if (x) m = m * gate_matrix(Gate::X);
  if (z) m = m * gate_matrix(Gate::Z);
  return m;
}

std::string local_op_name(RealLocalOp op) {
  switch (op) {
    case RealLocalOp::I: return "I";
    case RealLocalOp::Z: return "Z";
    case RealLocalOp::H: return "H";
    case RealLocalOp::HZ: return "HZ";
  }
  return "?";
}

std::vector<std::string> qubit_labels(int n) {
  std::vector<std::string> out;
  const int width = n > 10 ? static_cast<int>(std::to_string(n - 1).size()) : 1;
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i);
    out.push_back("q" + std::string(width - k.size(), '0') + k);
  }
  return out;
}

bool is_angle_free(const Diagram& d) {
  for (VertexId v : d.vertex_ids())
    if (is_spider(d.kind(v)) && !d.phase(v).is_zero()) return false;
  return true;
}

bool is_real(const Diagram& d) {
  for (VertexId v : d.vertex_ids())
    if (is_spider(d.kind(v)) && !d.phase(v).is_real()) return false;
  return true;
}

Diagram encode_angle_free(const Diagram& d) {
  if (!is_real(d))
    throw PreconditionError("only 0 and pi phases have an H-loop encoding");
  Diagram r = d;
  for (VertexId v : d.vertex_ids()) {
    if (!is_spider(d.kind(v)) || !d.phase(v).is_pi()) continue;
    r.set_phase(v, Phase());
    VertexId h = r.add_vertex(Kind::H);
    r.add_edge(v, h);
    r.add_edge(v, h);
  }
  return r;
}

Diagram decode_angle_free(const Diagram& d) {
  if (!is_angle_free(d))
    throw PreconditionError("decoding expects an angle-free diagram");
  Diagram r = d;
  for (VertexId h : d.vertex_ids()) {
    if (d.kind(h) != Kind::H) continue;
    const auto& n = d.neighbours(h);
    if (n[0] != n[1] || !is_spider(d.kind(n[0]))) continue;
    r.remove_vertex(h);
    r.set_phase(n[0], r.phase(n[0]) + Phase::pi());
  }
  return r;
}

namespace {

LocalOpWord word_of(const GsRlcDiagram& g) {
  LocalOpWord w;
  for (const auto& [v, c] : g.ops) {
    if (c.z) w.push(v, Gate::Z);
    if (c.x) w.push(v, Gate::X);
    if (c.h) w.push(v, Gate::H);
  }
  return w;
}

// Rewrites |G> as Z_C H_u H_v |G^uv> and folds the gates into the ops.
void pivot_into_ops(GsRlcDiagram& g, const std::string& u,
                    const std::string& v) {
  std::vector<std::string> common;
  for (const std::string& c : g.graph.neighbours(u))
    if (c != v && g.graph.has_edge(c, v)) common.push_back(c);
  g.graph = pivot(g.graph, u, v);
  g.ops[u] = g.ops[u].then_h();
  g.ops[v] = g.ops[v].then_h();
  for (const std::string& c : common) g.ops[c] = g.ops[c].then_z();
}

// X_v |G> = Z_N(v) |G> up to sign.
void push_x_out(GsRlcDiagram& g) {
  for (auto& [v, c] : g.ops) {
    if (!c.x) continue;
    c.x = false;
    for (const std::string& n : g.graph.neighbours(v))
      g.ops[n] = g.ops[n].then_z();
  }
}

std::optional<std::pair<std::string, std::string>> h_pair(
    const GsRlcDiagram& g) {
  for (const auto& [a, b] : g.graph.edges())
    if (g.ops.at(a).h && g.ops.at(b).h) return std::make_pair(a, b);
  return std::nullopt;
}

std::set<std::string> h_set(const GsRlcDiagram& g) {
  std::set<std::string> s;
  for (const auto& [v, c] : g.ops)
    if (c.h) s.insert(v);
  return s;
}

std::optional<std::pair<std::string, std::string>> crossed_pair(
    const GsRlcDiagram& a, const GsRlcDiagram& b) {
  std::set<std::string> ha = h_set(a), hb = h_set(b);
  for (const std::string& u : ha) {
    if (hb.count(u)) continue;
    for (const std::string& v : hb) {
      if (ha.count(v)) continue;
      if (a.graph.has_edge(u, v) || b.graph.has_edge(u, v))
        return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram gs_rlc_diagram(const GsRlcDiagram& g) {
  return apply_local_ops(graph_state_diagram(g.graph), word_of(g)).diagram;
}

DenseMatrix gs_rlc_vector(const GsRlcDiagram& g) {
  std::vector<std::string> labels = g.labels();
  if (g.zero) return DenseMatrix(std::size_t{1} << labels.size(), 1);
  return word_matrix(word_of(g), labels) * graph_state_vector(g.graph);
}

GsRlcDiagram to_gs_rlc(const Diagram& d) {
  if (d.num_inputs() != 0)
    throw PreconditionError("to_gs_rlc expects a diagram state");
  if (!is_real(d)) throw PreconditionError("diagram has non-real phases");
  GraphLikeView view = to_graph_like(d);

  GsRlcDiagram g;
  g.zero = view.zero;
  std::vector<std::string> out_labels = qubit_labels(d.num_outputs());
  std::map<VertexId, std::string> label;
  for (std::size_t i = 0; i < view.outputs.size(); ++i)
    label[view.outputs[i]] = out_labels[i];
  std::set<std::string> interior;
  for (const auto& [v, p] : view.spiders) {
    if (!label.count(v)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "t%08d", v);
      label[v] = buf;
      interior.insert(buf);
    }
    g.graph.add_vertex(label[v]);
    g.ops[label[v]].z = p.is_pi();
  }
  for (const Edge& e : view.h_edges) g.graph.add_edge(label[e.a], label[e.b]);

  // Each interior spider is the effect <+| L_v on its qubit.
  while (!interior.empty()) {
    std::string v = *std::min_element(
        interior.begin(), interior.end(),
        [&](const std::string& a, const std::string& b) {
          std::size_t da = g.graph.neighbours(a).size();
          std::size_t db = g.graph.neighbours(b).size();
          return da != db ? da < db : a < b;
        });
    const std::set<std::string>& nv = g.graph.neighbours(v);
    if (!g.ops[v].h) {
      if (nv.empty()) {
        // <-|+> vanishes, <+|+> is a scalar.
        if (g.ops[v].z) g.zero = true;
        g.graph.remove_vertex(v);
        g.ops.erase(v);
        interior.erase(v);
        continue;
      }
      pivot_into_ops(g, v, *nv.begin());
    }
    // Now a Z-basis effect <x|, which leaves Z^x on the neighbours.
    if (g.ops[v].x)
      for (const std::string& n : g.graph.neighbours(v))
        g.ops[n] = g.ops[n].then_z();
    g.graph.remove_vertex(v);
    g.ops.erase(v);
    interior.erase(v);
  }
  return g;
}

GsRlcDiagram reduce(const GsRlcDiagram& in) {
  GsRlcDiagram g = in;
  for (;;) {
    push_x_out(g);
    auto p = h_pair(g);
    if (!p) break;
    pivot_into_ops(g, p->first, p->second);
  }
  g.reduced = true;
  return g;
}

bool is_reduced(const GsRlcDiagram& g) {
  for (const auto& [v, c] : g.ops)
    if (!c.local_op()) return false;
  return !h_pair(g);
}

std::pair<GsRlcDiagram, GsRlcDiagram> simplify_pair(const GsRlcDiagram& a,
                                                    const GsRlcDiagram& b) {
  if (a.labels() != b.labels())
    throw PreconditionError("simplify_pair needs the same outputs");
  if (!is_reduced(a) || !is_reduced(b))
    throw PreconditionError("simplify_pair needs reduced diagrams");
  std::pair<GsRlcDiagram, GsRlcDiagram> r{a, b};
  auto measure = [&]() {
    std::set<std::string> ha = h_set(r.first), hb = h_set(r.second), diff;
    std::set_symmetric_difference(ha.begin(), ha.end(), hb.begin(), hb.end(),
                                  std::inserter(diff, diff.begin()));
    return diff.size();
  };
  while (auto p = crossed_pair(r.first, r.second)) {
    std::size_t before = measure();
    auto [u, v] = *p;
    if (r.first.graph.has_edge(u, v)) {
      pivot_into_ops(r.first, u, v);
      r.first = reduce(r.first);
    } else {
      pivot_into_ops(r.second, v, u);
      r.second = reduce(r.second);
    }
    if (measure() >= before)
      throw std::logic_error("simplify_pair: H mismatch count did not drop");
  }
  return r;
}

bool is_simplified_pair(const GsRlcDiagram& a, const GsRlcDiagram& b) {
  return !crossed_pair(a, b);
}

DecideResult decide_equal(const Diagram& a, const Diagram& b) {
  Diagram da = bend_inputs(a), db = bend_inputs(b);
  DecideResult res;
  if (da.num_outputs() != db.num_outputs()) {
    res.reason = "different numbers of outputs";
    return res;
  }
  GsRlcDiagram ga = reduce(to_gs_rlc(da));
  GsRlcDiagram gb = reduce(to_gs_rlc(db));
  if (ga.zero || gb.zero) {
    res.equal = ga.zero && gb.zero;
    res.reason = res.equal ? "both zero" : "exactly one side is zero";
    res.witness = std::make_pair(ga, gb);
    return res;
  }
  auto pair = simplify_pair(ga, gb);
  res.equal = pair.first.graph == pair.second.graph &&
              pair.first.ops == pair.second.ops;
  res.reason = res.equal ? "identical normal forms" : "normal forms differ";
  res.witness = std::move(pair);
  return res;
}

Diagram random_circuit_state(const CircuitOptions& opts, std::uint64_t seed) {
  if (opts.qubits < 0 || opts.projected < 0 || opts.depth < 0)
    throw PreconditionError("circuit sizes must be non-negative");
  std::mt19937_64 rng(seed);
  const int n = opts.qubits + opts.projected;
  Diagram d;
  std::vector<VertexId> front;
  std::bernoulli_distribution zero_prep(opts.zero_prep);
  for (int i = 0; i < n; ++i)
    front.push_back(d.add_spider(zero_prep(rng) ? Kind::X : Kind::Z));
  std::uniform_int_distribution<int> wire(0, std::max(0, n - 1));
  std::uniform_int_distribution<int> gate(0, n >= 2 ? 2 : 1);
  for (int step = 0; step < opts.depth && n > 0; ++step) {
    int g = gate(rng), q = wire(rng);
    if (g == 0) {
      VertexId s = d.add_spider(Kind::Z, Phase::pi());
      d.add_edge(front[q], s);
      front[q] = s;
    } else if (g == 1) {
      VertexId h = d.add_vertex(Kind::H);
      d.add_edge(front[q], h);
      front[q] = h;
    } else {
      int r = wire(rng);
      while (r == q) r = wire(rng);
      VertexId a = d.add_spider(Kind::Z), b = d.add_spider(Kind::Z);
      VertexId h = d.add_vertex(Kind::H);
      d.add_edge(front[q], a);
      d.add_edge(front[r], b);
      d.add_edge(a, h);
      d.add_edge(h, b);
      front[q] = a;
      front[r] = b;
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<int> projected(order.begin(), order.begin() + opts.projected);
  for (int i = 0; i < n; ++i) {
    if (projected.count(i))
      d.add_edge(front[i], d.add_spider(Kind::X));
    else
      d.add_edge(front[i], d.add_output());
  }
  return d;
}

}  // namespace zxp
