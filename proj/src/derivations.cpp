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

#include "zxpivot/derivations.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zxpivot/errors.hpp"

namespace zxp {

namespace {

bool is_z(const Diagram& d, VertexId v) { return d.kind(v) == Kind::Z; }

VertexId far_end(const Diagram& d, VertexId v, VertexId from) {
  const auto& n = d.neighbours(v);
  return n[0] == from ? n[1] : n[0];
}

VertexId pick(const Diagram& d, const std::vector<VertexId>& ids, Kind k) {
  for (VertexId v : ids)
    if (d.kind(v) == k) return v;
  throw PreconditionError("derivation step created no vertex of that kind");
}

VertexId adjacent_to(const Diagram& d, const std::vector<VertexId>& ids,
                     VertexId target) {
  for (VertexId v : ids)
    if (d.edge_count(v, target) > 0) return v;
  throw PreconditionError("derivation step created no adjacent vertex");
}

struct PivotSites {
  std::map<std::string, VertexId> spider;
  std::map<std::string, VertexId> gate;
  // H box joining each adjacent pair of graph spiders.
  std::map<std::pair<VertexId, VertexId>, VertexId> edge_box;
  std::vector<std::string> common;
};

PivotSites read_pivot_input(const LabelledState& s, const std::string& u,
                            const std::string& v) {
  const Diagram& d = s.diagram;
  if (d.num_inputs() != 0 || s.labels.size() != d.outputs().size())
    throw PreconditionError("pivot input must be a labelled state");
  PivotSites p;
  std::map<VertexId, std::string> owner;
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    VertexId o = d.outputs()[i];
    VertexId n = d.neighbours(o).front();
    VertexId sp = n;
    if (d.kind(n) == Kind::H ||
        (is_z(d, n) && d.phase(n).is_pi() && d.degree(n) == 2)) {
      p.gate[s.labels[i]] = n;
      sp = far_end(d, n, o);
    }
    if (!d.has_vertex(sp) || !is_z(d, sp) || !d.phase(sp).is_zero() ||
        owner.count(sp))
      throw PreconditionError("output " + s.labels[i] +
                              " is not attached to a graph spider");
    p.spider[s.labels[i]] = sp;
    owner[sp] = s.labels[i];
  }
  std::map<std::string, std::set<std::string>> adj;
  std::set<VertexId> gates;
  for (const auto& [l, g] : p.gate) gates.insert(g);
  for (VertexId x : d.vertex_ids()) {
    if (gates.count(x) || d.kind(x) == Kind::B || owner.count(x)) continue;
    const auto& n = d.neighbours(x);
    if (d.kind(x) != Kind::H || !owner.count(n[0]) || !owner.count(n[1]) ||
        n[0] == n[1] ||
        p.edge_box.count({std::min(n[0], n[1]), std::max(n[0], n[1])}))
      throw PreconditionError("pivot input is not a graph-state diagram");
    p.edge_box[{std::min(n[0], n[1]), std::max(n[0], n[1])}] = x;
    adj[owner[n[0]]].insert(owner[n[1]]);
    adj[owner[n[1]]].insert(owner[n[0]]);
  }
  for (VertexId sp : d.vertex_ids())
    if (owner.count(sp))
      for (VertexId n : d.neighbours(sp))
        if (n == sp) throw PreconditionError("graph spider carries a loop");
  if (!p.spider.count(u) || !p.spider.count(v) || u == v)
    throw PreconditionError("pivot vertices are not outputs");
  if (!adj[u].count(v))
    throw PreconditionError("pivot needs adjacent vertices " + u + ", " + v);
  for (const std::string& w : s.labels) {
    bool c = w != u && w != v && adj[u].count(w) && adj[v].count(w);
    if (c) p.common.push_back(w);
    auto it = p.gate.find(w);
    Kind want = (w == u || w == v) ? Kind::H : Kind::Z;
    bool needs_gate = w == u || w == v || c;
    if (needs_gate != (it != p.gate.end()) ||
        (needs_gate && d.kind(it->second) != want))
      throw PreconditionError("wrong local operator on output " + w);
  }
  return p;
}

VertexId box_between(const PivotSites& p, VertexId a, VertexId b) {
  return p.edge_box.at({std::min(a, b), std::max(a, b)});
}

// Removes two H boxes h1, h2 that both join the Z spiders a and b.
void hopf_through_h(Derivation& d, VertexId a, VertexId b, VertexId h1,
                    VertexId h2, const std::string& stage) {
  VertexId t = d.backward(Rule::S1, {{"s", b}}, stage, {h1, h2}, Phase())[0];
  d.backward(Rule::H2, {{"a", t}, {"b", b}}, stage);
  d.forward(Rule::H1, {{"s", t}}, stage);
  d.forward(Rule::HPF, {{"a", a}, {"b", t}}, stage);
  d.forward(Rule::H1, {{"s", t}}, stage, true);
  d.forward(Rule::S1, {{"a", b}, {"b", t}}, stage);
}

void cancel_external_box(Derivation& d, VertexId x, const std::string& stage) {
  for (VertexId h : d.diagram().neighbours(x)) {
    if (d.diagram().kind(h) != Kind::H) continue;
    VertexId o = far_end(d.diagram(), h, x);
    if (d.diagram().kind(o) == Kind::H) {
      d.forward(Rule::H2, {{"h0", h}, {"h1", o}}, stage);
      return;
    }
  }
}

void fuse_into_neighbour(Derivation& d, VertexId x, const std::string& stage) {
  for (VertexId n : d.diagram().neighbours(x))
    if (n != x && is_z(d.diagram(), n)) {
      d.forward(Rule::S1, {{"a", n}, {"b", x}}, stage);
      return;
    }
}

void no_common_core(Derivation& d, VertexId su, VertexId sv) {
  const std::string stage = "no-common-pivot";
  d.forward(Rule::H1, {{"s", su}}, stage);
  std::vector<VertexId> made =
      d.backward(Rule::BI, {{"g", sv}, {"r", su}}, stage);
  std::vector<VertexId> greens, reds;
  for (VertexId x : made)
    (is_z(d.diagram(), x) ? greens : reds).push_back(x);
  for (VertexId r : reds) {
    d.backward(Rule::H1, {{"s", r}}, stage);
    cancel_external_box(d, r, stage);
  }
  for (VertexId g : greens) fuse_into_neighbour(d, g, "spider");
  for (VertexId r : reds) fuse_into_neighbour(d, r, "spider");
  hopf_cleanup(d, "hopf");
}

}  // namespace

void hopf_cleanup(Derivation& d, const std::string& stage) {
  for (;;) {
    const Diagram& cur = d.diagram();
    std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> boxes;
    for (VertexId h : cur.vertex_ids()) {
      if (cur.kind(h) != Kind::H) continue;
      const auto& n = cur.neighbours(h);
      if (n[0] == n[1] || !is_z(cur, n[0]) || !is_z(cur, n[1])) continue;
      boxes[{std::min(n[0], n[1]), std::max(n[0], n[1])}].push_back(h);
    }
    bool done = true;
    for (const auto& [ab, hs] : boxes)
      if (hs.size() >= 2) {
        hopf_through_h(d, ab.first, ab.second, hs[0], hs[1], stage);
        done = false;
        break;
      }
    if (done) return;
  }
}

LabelledState pivot_input(const SimpleGraph& g, const std::string& u,
                          const std::string& v) {
  return apply_local_ops(graph_state_diagram(g), pivot_word(g, u, v));
}

Trace derive_pivot_no_common(const LabelledState& s, const std::string& u,
                             const std::string& v, bool checked) {
  PivotSites p = read_pivot_input(s, u, v);
  if (!p.common.empty())
    throw PreconditionError(u + " and " + v + " have common neighbours");
  Derivation d(s.diagram, Theory::PlainZX, checked);
  no_common_core(d, p.spider.at(u), p.spider.at(v));
  return d.trace();
}

Trace derive_pivot(const LabelledState& s, const std::string& u,
                   const std::string& v, Theory theory, bool checked) {
  PivotSites p = read_pivot_input(s, u, v);
  if (!p.common.empty()) require_in_theory(Rule::HL, theory);
  Derivation d(s.diagram, theory, checked);
  const VertexId su = p.spider.at(u), sv = p.spider.at(v);

  struct Split {
    VertexId c1, c2, m, ha, hb;
  };
  std::vector<Split> splits;
  for (const std::string& c : p.common) {
    VertexId sc = p.spider.at(c);
    d.forward(Rule::S1, {{"a", sc}, {"b", p.gate.at(c)}}, "hl-split");
    VertexId h = d.forward(Rule::HL, {{"s", sc}}, "hl-split")[0];
    VertexId c2 = d.backward(Rule::S1, {{"s", sc}}, "hl-split",
                             {box_between(p, sc, sv), h}, Phase())[0];
    std::vector<VertexId> hs =
        d.backward(Rule::H2, {{"a", sc}, {"b", c2}}, "hl-split");
    VertexId ha = adjacent_to(d.diagram(), hs, sc);
    VertexId hb = adjacent_to(d.diagram(), hs, c2);
    VertexId m = d.backward(Rule::S3, {{"a", ha}, {"b", hb}}, "hl-split")[0];
    splits.push_back({sc, c2, m, ha, hb});
  }

  no_common_core(d, su, sv);

  for (const Split& x : splits) {
    d.forward(Rule::S3, {{"s", x.m}}, "spider");
    d.forward(Rule::H2, {{"h0", x.ha}, {"h1", x.hb}}, "spider");
    d.forward(Rule::S1, {{"a", x.c1}, {"b", x.c2}}, "spider");
  }
  hopf_cleanup(d, "hopf");
  return d.trace();
}

Diagram h_loop_diagram() {
  Diagram d;
  VertexId in = d.add_input();
  VertexId s = d.add_spider(Kind::Z);
  VertexId out = d.add_output();
  VertexId h = d.add_vertex(Kind::H);
  d.add_edge(in, s);
  d.add_edge(s, out);
  d.add_edge(s, h);
  d.add_edge(s, h);
  return d;
}

Diagram pi_rotation_diagram() {
  Diagram d;
  VertexId in = d.add_input();
  VertexId s = d.add_spider(Kind::Z, Phase::pi());
  VertexId out = d.add_output();
  d.add_edge(in, s);
  d.add_edge(s, out);
  return d;
}

Trace derive_hl_from_triangle_pivot(bool checked) {
  Diagram start = h_loop_diagram();
  VertexId s = -1, h = -1;
  for (VertexId x : start.vertex_ids()) {
    if (start.kind(x) == Kind::Z) s = x;
    if (start.kind(x) == Kind::H) h = x;
  }
  Derivation d(start, Theory::ZXPlusHL, checked);
  VertexId t = d.backward(Rule::S1, {{"s", s}}, "unfuse", {h}, Phase())[0];

  std::vector<VertexId> hs = d.backward(Rule::H2, {{"a", s}, {"b", t}},
                                        "triangle");
  VertexId ha = adjacent_to(d.diagram(), hs, s);
  VertexId hb = adjacent_to(d.diagram(), hs, t);
  VertexId m = d.backward(Rule::S3, {{"a", ha}, {"b", hb}}, "triangle")[0];

  std::vector<VertexId> units = d.forward(
      Rule::TP,
      {{"u", m}, {"v", t}, {"w", s}, {"huv", hb}, {"huw", ha}, {"hvw", h}},
      "pivot");
  VertexId um = adjacent_to(d.diagram(), units, m);
  VertexId ut = adjacent_to(d.diagram(), units, t);
  d.forward(Rule::C, {{"s", m}, {"u", um}}, "copy");
  d.forward(Rule::C, {{"s", t}, {"u", ut}}, "copy");

  // Units hanging off the boxes that reach s.
  std::vector<VertexId> outer;
  for (VertexId box : {ha, h}) outer.push_back(far_end(d.diagram(), box, s));
  for (VertexId x : outer) d.forward(Rule::H1, {{"s", x}}, "colour", true);
  for (VertexId x : outer)
    d.forward(Rule::S1, {{"a", s}, {"b", x}}, "spider");
  d.forward(Rule::SCALAR, {{"v", hb}}, "scalar");
  return d.trace();
}

Trace derive_hl_from_eu(Theory theory, bool checked) {
  Diagram start = h_loop_diagram();
  VertexId s = -1, h = -1;
  for (VertexId x : start.vertex_ids()) {
    if (start.kind(x) == Kind::Z) s = x;
    if (start.kind(x) == Kind::H) h = x;
  }
  require_in_theory(Rule::EU, theory);
  Derivation d(start, theory, checked);
  std::vector<VertexId> chain = d.forward(Rule::EU, {{"h", h}}, "euler");
  VertexId x = pick(d.diagram(), chain, Kind::X);
  for (VertexId z : chain)
    if (z != x) d.forward(Rule::S1, {{"a", s}, {"b", z}}, "spider");
  d.forward(Rule::HPF, {{"a", s}, {"b", x}}, "hopf");
  d.forward(Rule::SCALAR, {{"v", x}}, "scalar");
  return d.trace();
}

// ---------------------------------------------------------------------------

namespace {

bool apply_first(Derivation& d, const std::vector<RuleId>& rules,
                 const std::string& stage) {
  for (const RuleId& r : rules) {
    std::vector<MatchSite> sites =
        find_matches(d.diagram(), r, Direction::Forward, d.theory());
    if (!sites.empty()) {
      d.apply(sites.front(), stage);
      return true;
    }
  }
  return false;
}

}  // namespace

Trace reduce_single_colour(const Diagram& start, bool checked) {
  Kind colour = Kind::B;
  for (VertexId v : start.vertex_ids()) {
    Kind k = start.kind(v);
    if (k == Kind::H)
      throw PreconditionError("single-colour reduction needs no H boxes");
    if (k == Kind::B) continue;
    if (colour != Kind::B && k != colour)
      throw PreconditionError("diagram has spiders of both colours");
    colour = k;
  }
  const bool sw = colour == Kind::X;
  Derivation d(start, Theory::PlainZX, checked);
  while (apply_first(d, {{Rule::S1, sw}}, "spider")) {
  }
  while (apply_first(d, {{Rule::S2, sw}}, "loop")) {
  }
  return d.trace();
}

Trace reduce_to_bipartite(const Diagram& start, bool checked) {
  for (VertexId v : start.vertex_ids())
    if (start.kind(v) == Kind::H)
      throw PreconditionError("bipartite reduction needs an H-free diagram");
  Derivation d(start, Theory::PlainZX, checked);
  for (;;) {
    if (apply_first(d, {{Rule::S1, false}, {Rule::S1, true}}, "spider"))
      continue;
    if (apply_first(d, {{Rule::S2, false}, {Rule::S2, true}}, "loop"))
      continue;
    if (apply_first(d, {{Rule::HPF, false}}, "hopf")) continue;
    break;
  }
  return d.trace();
}

Trace eliminate_colour(const Diagram& start, Kind k, bool checked) {
  if (!is_spider(k)) throw PreconditionError("colour must be Z or X");
  Derivation d(start, Theory::PlainZX, checked);
  for (VertexId v : start.vertex_ids())
    if (start.kind(v) == k)
      d.backward(Rule::H1, {{"s", v}}, "colour", {}, Phase(), k == Kind::Z);
  while (apply_first(d, {{Rule::H2, false}}, "hadamard")) {
  }
  return d.trace();
}

bool is_single_spider(const Diagram& d) {
  int spiders = 0;
  for (VertexId v : d.vertex_ids()) {
    Kind k = d.kind(v);
    if (k == Kind::H) return false;
    if (is_spider(k)) {
      ++spiders;
      if (d.loop_count(v) != 0) return false;
    }
  }
  return spiders == 1;
}

bool is_simple_bipartite(const Diagram& d) {
  for (VertexId v : d.vertex_ids()) {
    Kind k = d.kind(v);
    if (k == Kind::H) return false;
    if (!is_spider(k)) continue;
    for (VertexId n : d.adjacent(v)) {
      if (n == v) return false;
      if (d.kind(n) == k || (is_spider(d.kind(n)) && d.edge_count(v, n) > 1))
        return false;
    }
  }
  return true;
}

namespace {

Phase random_phase(std::mt19937_64& rng) {
  return Phase(std::uniform_int_distribution<int>(0, 3)(rng), 2);
}

void attach_boundaries(Diagram& d, const std::vector<VertexId>& spiders,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 2);
  std::uniform_int_distribution<std::size_t> at(0, spiders.size() - 1);
  int ins = count(rng), outs = 1 + count(rng);
  for (int i = 0; i < ins; ++i) d.add_edge(d.add_input(), spiders[at(rng)]);
  for (int i = 0; i < outs; ++i) d.add_edge(spiders[at(rng)], d.add_output());
}

Diagram random_spider_diagram(std::uint64_t seed, int max_spiders,
                              bool two_colours) {
  std::mt19937_64 rng(seed);
  int n = std::uniform_int_distribution<int>(1, std::max(1, max_spiders))(rng);
  Diagram d;
  std::vector<VertexId> sp;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i)
    sp.push_back(d.add_spider(two_colours && coin(rng) ? Kind::X : Kind::Z,
                              random_phase(rng)));
  for (int i = 1; i < n; ++i)
    d.add_edge(sp[i], sp[std::uniform_int_distribution<int>(0, i - 1)(rng)]);
  int extra = std::uniform_int_distribution<int>(0, n)(rng);
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int i = 0; i < extra; ++i) d.add_edge(sp[any(rng)], sp[any(rng)]);
  attach_boundaries(d, sp, rng);
  return d;
}

}  // namespace

Diagram random_single_colour_diagram(std::uint64_t seed, int max_spiders) {
  return random_spider_diagram(seed, max_spiders, false);
}

Diagram random_h_free_diagram(std::uint64_t seed, int max_spiders) {
  return random_spider_diagram(seed, max_spiders, true);
}

}  // namespace zxp
