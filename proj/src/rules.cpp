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

#include "zxpivot/rules.hpp"

#include <algorithm>
#include <set>

#include "zxpivot/errors.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {

namespace {

struct Colours {
  Kind g;
  Kind r;
};

Colours colours(const RuleId& id) {
  return id.swapped ? Colours{Kind::X, Kind::Z} : Colours{Kind::Z, Kind::X};
}

bool has(const Diagram& d, VertexId v, Kind k) {
  return d.has_vertex(v) && d.kind(v) == k;
}

bool has_key(const MatchSite& s, const std::string& key) {
  return s.binding.count(key) != 0;
}

// Neighbour of the degree-2 vertex v reached by the edge end not at `from`.
VertexId other_end(const Diagram& d, VertexId v, VertexId from) {
  const auto& n = d.neighbours(v);
  return n[0] == from ? n[1] : n[0];
}

bool is_unit(const Diagram& d, VertexId v, Kind k, Phase p) {
  return has(d, v, k) && d.phase(v) == p && d.degree(v) == 1 &&
         d.loop_count(v) == 0;
}

bool distinct(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Neighbour list of s with one occurrence of `skip` removed.
std::vector<VertexId> other_legs(const Diagram& d, VertexId s, VertexId skip) {
  std::vector<VertexId> legs = d.neighbours(s);
  auto it = std::find(legs.begin(), legs.end(), skip);
  if (it != legs.end()) legs.erase(it);
  return legs;
}

// Closed component containing v, or empty if it reaches a boundary.
std::vector<VertexId> closed_component(const Diagram& d, VertexId v) {
  std::set<VertexId> seen{v};
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (d.kind(x) == Kind::B) return {};
    for (VertexId n : d.neighbours(x))
      if (seen.insert(n).second) stack.push_back(n);
  }
  return {seen.begin(), seen.end()};
}

Diagram subdiagram(const Diagram& d, const std::vector<VertexId>& vs) {
  Diagram sub;
  std::set<VertexId> in(vs.begin(), vs.end());
  for (VertexId v : vs) sub.add_vertex_with_id(v, d.kind(v), d.phase(v));
  for (const Edge& e : d.edges())
    if (in.count(e.a)) sub.add_edge(e.a, e.b);
  return sub;
}

// The red pi box encoding: phase-0 spider x of degree 4 carrying exactly one
// H box double-edged to it. Returns that box, or -1.
VertexId h_loop_box(const Diagram& d, VertexId x) {
  VertexId found = -1;
  for (VertexId n : d.adjacent(x))
    if (d.kind(n) == Kind::H && d.edge_count(x, n) == 2) {
      if (found >= 0) return -1;
      found = n;
    }
  return found;
}

std::vector<std::string> block_keys(const MatchSite& s, char prefix) {
  std::vector<std::string> keys;
  for (int i = 0; has_key(s, std::string(1, prefix) + std::to_string(i)); ++i)
    keys.push_back(std::string(1, prefix) + std::to_string(i));
  return keys;
}

// ---------------------------------------------------------------------------
// validity

bool valid_s1(const Diagram& d, const MatchSite& s, Colours c) {
  if (s.direction == Direction::Forward) {
    VertexId a = s.at("a"), b = s.at("b");
    return a != b && has(d, a, c.g) && has(d, b, c.g) && d.edge_count(a, b) > 0;
  }
  VertexId v = s.at("s");
  if (!has(d, v, c.g)) return false;
  std::map<VertexId, int> count;
  for (VertexId n : s.legs) ++count[n];
  for (auto [n, k] : count) {
    if (!d.has_vertex(n)) return false;
    int avail = n == v ? 2 * d.loop_count(v) : d.edge_count(v, n);
    if (k > avail) return false;
  }
  return true;
}

bool valid_s3_forward(const Diagram& d, VertexId v, Colours c) {
  if (!has(d, v, c.g) || !d.phase(v).is_zero() || d.degree(v) != 2 ||
      d.loop_count(v) != 0)
    return false;
  const auto& n = d.neighbours(v);
  return !(n[0] == n[1] && d.kind(n[0]) == Kind::H);
}

bool valid_pi_forward(const Diagram& d, VertexId v, VertexId x, Colours c,
                      bool need_zero) {
  if (!has(d, v, c.g) || d.loop_count(v) != 0) return false;
  if (need_zero && !d.phase(v).is_zero()) return false;
  return has(d, x, c.r) && d.phase(x).is_pi() && d.degree(x) == 2 &&
         d.loop_count(x) == 0 && d.edge_count(v, x) == 1;
}

bool valid_pi_backward(const Diagram& d, VertexId v, VertexId n, Colours c) {
  if (!has(d, v, c.g) || d.loop_count(v) != 0 || !d.has_vertex(n) ||
      d.edge_count(v, n) == 0)
    return false;
  std::vector<VertexId> rest = other_legs(d, v, n);
  if (!distinct(rest)) return false;
  for (VertexId m : rest)
    if (!valid_pi_forward(d, v, m, c, false)) return false;
  return true;
}

bool valid_h1_forward(const Diagram& d, VertexId v, Colours c) {
  if (!has(d, v, c.g)) return false;
  const auto& n = d.neighbours(v);
  if (!distinct(n)) return false;
  for (VertexId h : n)
    if (h == v || d.kind(h) != Kind::H) return false;
  return true;
}

bool valid_bi_forward(const Diagram& d, const MatchSite& s, Colours c) {
  std::vector<VertexId> gs, rs;
  for (const auto& k : block_keys(s, 'g')) gs.push_back(s.at(k));
  for (const auto& k : block_keys(s, 'r')) rs.push_back(s.at(k));
  if (gs.empty() || rs.empty()) return false;
  std::vector<VertexId> all = gs;
  all.insert(all.end(), rs.begin(), rs.end());
  if (!distinct(all)) return false;
  for (VertexId g : gs)
    if (!has(d, g, c.g) || !d.phase(g).is_zero()) return false;
  for (VertexId r : rs)
    if (!has(d, r, c.r) || !d.phase(r).is_zero()) return false;
  for (VertexId g : gs)
    for (VertexId r : rs)
      if (d.edge_count(g, r) != 1) return false;
  return true;
}

bool valid_bi_backward(const Diagram& d, VertexId g, VertexId r, Colours c) {
  return has(d, g, c.g) && has(d, r, c.r) && d.phase(g).is_zero() &&
         d.phase(r).is_zero() && d.edge_count(g, r) == 1 &&
         d.loop_count(g) == 0 && d.loop_count(r) == 0;
}

bool valid_h2_forward(const Diagram& d, VertexId h0, VertexId h1) {
  if (h0 == h1 || !has(d, h0, Kind::H) || !has(d, h1, Kind::H) ||
      d.edge_count(h0, h1) != 1)
    return false;
  VertexId a = other_end(d, h0, h1), b = other_end(d, h1, h0);
  return !(a == b && d.kind(a) == Kind::H);
}

bool is_quarter(const Diagram& d, VertexId v, Kind k) {
  return has(d, v, k) && d.phase(v) == Phase(1, 2) && d.degree(v) == 2 &&
         d.loop_count(v) == 0;
}

bool valid_eu_backward(const Diagram& d, VertexId a, VertexId b, VertexId e,
                       Colours c) {
  if (!is_quarter(d, a, c.g) || !is_quarter(d, b, c.r) ||
      !is_quarter(d, e, c.g) || a == e)
    return false;
  if (d.edge_count(a, b) != 1 || d.edge_count(b, e) != 1) return false;
  VertexId oa = other_end(d, a, b), oe = other_end(d, e, b);
  return oa != e && oe != a;
}

bool valid_l_forward(const Diagram& d, VertexId v, VertexId x, Colours c) {
  if (!has(d, v, c.g) || !d.phase(v).is_zero() || d.loop_count(v) != 0)
    return false;
  if (!has(d, x, c.r) || !d.phase(x).is_zero() || d.degree(x) != 4 ||
      d.loop_count(x) != 0 || d.edge_count(v, x) != 1)
    return false;
  VertexId hx = h_loop_box(d, x);
  if (hx < 0) return false;
  for (VertexId y : d.neighbours(x))
    if (y != v && y != hx) return true;
  return false;
}

bool valid_tp(const Diagram& d, const MatchSite& s, Colours c) {
  VertexId u = s.at("u"), v = s.at("v"), w = s.at("w");
  VertexId huv = s.at("huv"), huw = s.at("huw"), hvw = s.at("hvw");
  if (!distinct({u, v, w, huv, huw, hvw})) return false;
  for (VertexId x : {u, v})
    if (!has(d, x, c.g) || !d.phase(x).is_zero() || d.degree(x) != 2 ||
        d.loop_count(x) != 0)
      return false;
  if (!has(d, w, c.g)) return false;
  for (VertexId h : {huv, huw, hvw})
    if (!has(d, h, Kind::H)) return false;
  return d.edge_count(u, huv) == 1 && d.edge_count(v, huv) == 1 &&
         d.edge_count(u, huw) == 1 && d.edge_count(w, huw) == 1 &&
         d.edge_count(v, hvw) == 1 && d.edge_count(w, hvw) == 1;
}

bool valid_scalar(const Diagram& d, VertexId v) {
  if (!d.has_vertex(v)) return false;
  std::vector<VertexId> comp = closed_component(d, v);
  if (comp.empty()) return false;
  return !interpret(subdiagram(d, comp)).is_zero(1e-9);
}

bool valid_impl(const Diagram& d, const MatchSite& s) {
  const Colours c = colours(s.rule);
  const bool fwd = s.direction == Direction::Forward;
  switch (s.rule.rule) {
    case Rule::S1:
      return valid_s1(d, s, c);
    case Rule::S2:
      return has(d, s.at("s"), c.g) &&
             (!fwd || d.loop_count(s.at("s")) > 0);
    case Rule::S3:
      if (fwd) return valid_s3_forward(d, s.at("s"), c);
      return d.has_vertex(s.at("a")) && d.has_vertex(s.at("b")) &&
             d.edge_count(s.at("a"), s.at("b")) > 0;
    case Rule::PI:
      if (fwd) return valid_pi_forward(d, s.at("s"), s.at("x"), c, false);
      return valid_pi_backward(d, s.at("s"), s.at("n"), c);
    case Rule::C2:
      return fwd && valid_pi_forward(d, s.at("s"), s.at("x"), c, true);
    case Rule::C:
    case Rule::C1: {
      if (!fwd) return false;
      VertexId v = s.at("s"), u = s.at("u");
      Phase p = s.rule.rule == Rule::C ? Phase() : Phase::pi();
      return has(d, v, c.g) && d.loop_count(v) == 0 &&
             is_unit(d, u, c.r, p) && d.edge_count(v, u) == 1;
    }
    case Rule::H1:
      if (fwd) return valid_h1_forward(d, s.at("s"), c);
      return has(d, s.at("s"), c.r);
    case Rule::HPF: {
      VertexId a = s.at("a"), b = s.at("b");
      return has(d, a, c.g) && has(d, b, c.r) &&
             d.edge_count(a, b) >= (fwd ? 2 : 0);
    }
    case Rule::BI:
      if (fwd) return valid_bi_forward(d, s, c);
      return valid_bi_backward(d, s.at("g"), s.at("r"), c);
    case Rule::H2:
      if (fwd) return valid_h2_forward(d, s.at("h0"), s.at("h1"));
      return d.has_vertex(s.at("a")) && d.has_vertex(s.at("b")) &&
             d.edge_count(s.at("a"), s.at("b")) > 0;
    case Rule::EU:
      if (fwd) return has(d, s.at("h"), Kind::H);
      return valid_eu_backward(d, s.at("a"), s.at("b"), s.at("c"), c);
    case Rule::HL:
      if (fwd) return has(d, s.at("s"), c.g);
      return has(d, s.at("s"), c.g) && has(d, s.at("h"), Kind::H) &&
             d.edge_count(s.at("s"), s.at("h")) == 2;
    case Rule::L:
      return fwd && valid_l_forward(d, s.at("s"), s.at("x"), c);
    case Rule::TP:
      return fwd && valid_tp(d, s, c);
    case Rule::SCALAR:
      return fwd && valid_scalar(d, s.at("v"));
  }
  return false;
}

// ---------------------------------------------------------------------------
// application

void apply_s1(Diagram& d, const MatchSite& s, Colours c) {
  if (s.direction == Direction::Forward) {
    VertexId a = s.at("a"), b = s.at("b");
    d.set_phase(a, d.phase(a) + d.phase(b));
    std::vector<VertexId> nb = d.neighbours(b);
    int loops = d.loop_count(b);
    int joins = d.edge_count(a, b);
    d.remove_vertex(b);
    for (int i = 0; i < loops; ++i) d.add_edge(a, a);
    for (int i = 1; i < joins; ++i) d.add_edge(a, a);
    for (VertexId n : nb)
      if (n != a && n != b) d.add_edge(a, n);
    return;
  }
  VertexId v = s.at("s");
  VertexId t = d.add_vertex(c.g, s.phase);
  d.set_phase(v, d.phase(v) - s.phase);
  int loop_ends = 0;
  for (VertexId n : s.legs) {
    if (n == v) {
      ++loop_ends;
      continue;
    }
    d.remove_edge(v, n);
    d.add_edge(t, n);
  }
  for (int i = 0; i + 1 < loop_ends; i += 2) {
    d.remove_edge(v, v);
    d.add_edge(t, t);
  }
  if (loop_ends % 2) {
    d.remove_edge(v, v);
    d.add_edge(v, t);
  }
  d.add_edge(v, t);
}

void apply_pi_forward(Diagram& d, VertexId v, VertexId x, Colours c) {
  VertexId y = other_end(d, x, v);
  d.splice(x);
  d.set_phase(v, -d.phase(v));
  for (VertexId n : other_legs(d, v, y))
    d.insert_on_edge(v, n, c.r, Phase::pi());
}

void apply_copy(Diagram& d, VertexId v, VertexId u, Colours c, Phase p) {
  std::vector<VertexId> legs = other_legs(d, v, u);
  d.remove_vertex(u);
  d.remove_vertex(v);
  for (VertexId n : legs) d.add_edge(d.add_vertex(c.r, p), n);
}

void apply_h1_backward(Diagram& d, VertexId v, Colours c) {
  int loops = d.loop_count(v);
  std::vector<VertexId> legs;
  for (VertexId n : d.neighbours(v))
    if (n != v) legs.push_back(n);
  for (VertexId n : legs) d.insert_on_edge(v, n, Kind::H);
  for (int i = 0; i < loops; ++i) {
    VertexId h = d.insert_on_edge(v, v, Kind::H);
    d.insert_on_edge(h, v, Kind::H);
  }
  d.set_kind(v, c.g);
}

void apply_bi_backward(Diagram& d, VertexId g, VertexId r, Colours c) {
  std::vector<VertexId> g_legs = other_legs(d, g, r);
  std::vector<VertexId> r_legs = other_legs(d, r, g);
  d.remove_vertex(g);
  d.remove_vertex(r);
  std::vector<VertexId> new_g, new_r;
  for (VertexId n : r_legs) {
    VertexId x = d.add_vertex(c.g);
    d.add_edge(x, n);
    new_g.push_back(x);
  }
  for (VertexId n : g_legs) {
    VertexId x = d.add_vertex(c.r);
    d.add_edge(x, n);
    new_r.push_back(x);
  }
  for (VertexId a : new_g)
    for (VertexId b : new_r) d.add_edge(a, b);
}

void apply_impl(Diagram& d, const MatchSite& s) {
  const Colours c = colours(s.rule);
  const bool fwd = s.direction == Direction::Forward;
  switch (s.rule.rule) {
    case Rule::S1:
      apply_s1(d, s, c);
      return;
    case Rule::S2:
      if (fwd)
        d.remove_edge(s.at("s"), s.at("s"));
      else
        d.add_edge(s.at("s"), s.at("s"));
      return;
    case Rule::S3:
      if (fwd)
        d.splice(s.at("s"));
      else
        d.insert_on_edge(s.at("a"), s.at("b"), c.g);
      return;
    case Rule::PI:
    case Rule::C2:
      if (fwd) {
        apply_pi_forward(d, s.at("s"), s.at("x"), c);
      } else {
        VertexId v = s.at("s"), n = s.at("n");
        for (VertexId m : other_legs(d, v, n)) d.splice(m);
        d.set_phase(v, -d.phase(v));
        d.insert_on_edge(v, n, c.r, Phase::pi());
      }
      return;
    case Rule::C:
      apply_copy(d, s.at("s"), s.at("u"), c, Phase());
      return;
    case Rule::C1:
      apply_copy(d, s.at("s"), s.at("u"), c, Phase::pi());
      return;
    case Rule::H1:
      if (fwd) {
        VertexId v = s.at("s");
        std::vector<VertexId> hs = d.neighbours(v);
        d.set_kind(v, c.r);
        for (VertexId h : hs) d.splice(h);
      } else {
        apply_h1_backward(d, s.at("s"), c);
      }
      return;
    case Rule::HPF:
      for (int i = 0; i < 2; ++i)
        if (fwd)
          d.remove_edge(s.at("a"), s.at("b"));
        else
          d.add_edge(s.at("a"), s.at("b"));
      return;
    case Rule::BI:
      if (fwd) {
        std::vector<VertexId> gs, rs;
        for (const auto& k : block_keys(s, 'g')) gs.push_back(s.at(k));
        for (const auto& k : block_keys(s, 'r')) rs.push_back(s.at(k));
        d = s.rule.swapped ? generalized_bialgebra(d, gs, rs)
                           : generalized_bialgebra(d, rs, gs);
      } else {
        apply_bi_backward(d, s.at("g"), s.at("r"), c);
      }
      return;
    case Rule::H2:
      if (fwd) {
        VertexId h0 = s.at("h0"), h1 = s.at("h1");
        VertexId a = other_end(d, h0, h1), b = other_end(d, h1, h0);
        d.remove_vertex(h0);
        d.remove_vertex(h1);
        d.add_edge(a, b);
      } else {
        VertexId b = s.at("b");
        VertexId h = d.insert_on_edge(s.at("a"), b, Kind::H);
        d.insert_on_edge(h, b, Kind::H);
      }
      return;
    case Rule::EU:
      if (fwd) {
        VertexId h = s.at("h");
        std::vector<VertexId> n = d.neighbours(h);
        d.remove_vertex(h);
        VertexId z1 = d.add_vertex(c.g, Phase(1, 2));
        VertexId x = d.add_vertex(c.r, Phase(1, 2));
        VertexId z2 = d.add_vertex(c.g, Phase(1, 2));
        d.add_edge(n[0], z1);
        d.add_edge(z1, x);
        d.add_edge(x, z2);
        d.add_edge(z2, n[1]);
      } else {
        VertexId a = s.at("a"), b = s.at("b"), e = s.at("c");
        VertexId oa = other_end(d, a, b), oe = other_end(d, e, b);
        d.remove_vertex(a);
        d.remove_vertex(b);
        d.remove_vertex(e);
        VertexId h = d.add_vertex(Kind::H);
        d.add_edge(oa, h);
        d.add_edge(h, oe);
      }
      return;
    case Rule::HL:
      if (fwd) {
        VertexId v = s.at("s");
        d.set_phase(v, d.phase(v) - Phase::pi());
        VertexId h = d.add_vertex(Kind::H);
        d.add_edge(v, h);
        d.add_edge(v, h);
      } else {
        VertexId v = s.at("s");
        d.remove_vertex(s.at("h"));
        d.set_phase(v, d.phase(v) + Phase::pi());
      }
      return;
    case Rule::L: {
      VertexId v = s.at("s"), x = s.at("x");
      VertexId hx = h_loop_box(d, x);
      VertexId y = -1;
      for (VertexId n : d.neighbours(x))
        if (n != v && n != hx) y = n;
      d.remove_vertex(hx);
      d.remove_vertex(x);
      d.add_edge(v, y);
      for (VertexId n : other_legs(d, v, y)) {
        VertexId m = d.insert_on_edge(v, n, c.r);
        VertexId h = d.add_vertex(Kind::H);
        d.add_edge(m, h);
        d.add_edge(m, h);
      }
      return;
    }
    case Rule::TP:
      for (const char* key : {"u", "v"})
        d.add_edge(s.at(key), d.add_vertex(c.r));
      d.set_phase(s.at("w"), d.phase(s.at("w")) + Phase::pi());
      return;
    case Rule::SCALAR:
      for (VertexId v : closed_component(d, s.at("v"))) d.remove_vertex(v);
      return;
  }
}

// ---------------------------------------------------------------------------
// enumeration

MatchSite make(RuleId id, Direction dir,
               std::map<std::string, VertexId> binding) {
  MatchSite s;
  s.rule = id;
  s.direction = dir;
  s.binding = std::move(binding);
  return s;
}

std::vector<MatchSite> candidates(const Diagram& d, RuleId id,
                                  Direction dir) {
  const Colours c = colours(id);
  const bool fwd = dir == Direction::Forward;
  std::vector<MatchSite> out;
  auto spiders = [&](Kind k) {
    std::vector<VertexId> vs;
    for (VertexId v : d.vertex_ids())
      if (d.kind(v) == k) vs.push_back(v);
    return vs;
  };
  auto distinct_edges = [&]() {
    std::vector<Edge> es = d.edges();
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
  };
  switch (id.rule) {
    case Rule::S1:
      if (fwd) {
        for (const Edge& e : d.edges())
          if (e.a != e.b) out.push_back(make(id, dir, {{"a", e.a}, {"b", e.b}}));
      } else {
        for (VertexId v : spiders(c.g)) out.push_back(make(id, dir, {{"s", v}}));
      }
      break;
    case Rule::S2:
    case Rule::HL:
      for (VertexId v : spiders(c.g)) {
        if (id.rule == Rule::HL && fwd) {
          if (d.phase(v).is_pi()) out.push_back(make(id, dir, {{"s", v}}));
        } else if (id.rule == Rule::HL) {
          for (VertexId h : d.adjacent(v))
            out.push_back(make(id, dir, {{"s", v}, {"h", h}}));
        } else {
          out.push_back(make(id, dir, {{"s", v}}));
        }
      }
      break;
    case Rule::S3:
    case Rule::H2:
      if (fwd && id.rule == Rule::S3) {
        for (VertexId v : spiders(c.g)) out.push_back(make(id, dir, {{"s", v}}));
      } else if (fwd) {
        for (const Edge& e : distinct_edges())
          out.push_back(make(id, dir, {{"h0", e.a}, {"h1", e.b}}));
      } else {
        for (const Edge& e : distinct_edges())
          out.push_back(make(id, dir, {{"a", e.a}, {"b", e.b}}));
      }
      break;
    case Rule::PI:
    case Rule::C2:
    case Rule::L:
    case Rule::C:
    case Rule::C1: {
      const char* key =
          (id.rule == Rule::C || id.rule == Rule::C1) ? "u" : "x";
      for (VertexId v : spiders(c.g))
        for (VertexId n : d.adjacent(v)) {
          if (fwd)
            out.push_back(make(id, dir, {{"s", v}, {key, n}}));
          else
            out.push_back(make(id, dir, {{"s", v}, {"n", n}}));
        }
      break;
    }
    case Rule::H1:
      for (VertexId v : spiders(fwd ? c.g : c.r))
        out.push_back(make(id, dir, {{"s", v}}));
      break;
    case Rule::HPF:
      for (VertexId a : spiders(c.g))
        for (VertexId b : d.adjacent(a))
          out.push_back(make(id, dir, {{"a", a}, {"b", b}}));
      break;
    case Rule::BI:
      if (fwd) {
        std::vector<VertexId> gs = spiders(c.g);
        for (std::size_t i = 0; i < gs.size(); ++i)
          for (std::size_t j = i + 1; j < gs.size(); ++j) {
            std::vector<VertexId> common;
            for (VertexId r : d.adjacent(gs[i]))
              if (d.kind(r) == c.r && d.edge_count(gs[j], r) > 0)
                common.push_back(r);
            for (std::size_t k = 0; k < common.size(); ++k)
              for (std::size_t l = k + 1; l < common.size(); ++l)
                out.push_back(make(id, dir,
                                   {{"g0", gs[i]}, {"g1", gs[j]},
                                    {"r0", common[k]}, {"r1", common[l]}}));
          }
      } else {
        for (VertexId g : spiders(c.g))
          for (VertexId r : d.adjacent(g))
            out.push_back(make(id, dir, {{"g", g}, {"r", r}}));
      }
      break;
    case Rule::EU:
      if (fwd) {
        for (VertexId h : spiders(Kind::H))
          out.push_back(make(id, dir, {{"h", h}}));
      } else {
        for (VertexId b : spiders(c.r)) {
          std::vector<VertexId> n = d.adjacent(b);
          if (n.size() != 2) continue;
          out.push_back(make(id, dir, {{"a", n[0]}, {"b", b}, {"c", n[1]}}));
        }
      }
      break;
    case Rule::TP:
      if (!fwd) break;
      for (VertexId u : spiders(c.g)) {
        if (d.degree(u) != 2) continue;
        const auto& hs = d.neighbours(u);
        for (int k = 0; k < 2; ++k) {
          VertexId huv = hs[k], huw = hs[1 - k];
          if (d.kind(huv) != Kind::H || d.kind(huw) != Kind::H || huv == huw)
            continue;
          VertexId v = other_end(d, huv, u), w = other_end(d, huw, u);
          if (v <= u || !d.has_vertex(v) || d.degree(v) != 2) continue;
          VertexId hvw = other_legs(d, v, huv).front();
          out.push_back(make(id, dir,
                             {{"u", u}, {"v", v}, {"w", w},
                              {"huv", huv}, {"huw", huw}, {"hvw", hvw}}));
        }
      }
      break;
    case Rule::SCALAR: {
      if (!fwd) break;
      std::set<VertexId> done;
      for (VertexId v : d.vertex_ids()) {
        if (done.count(v)) continue;
        std::vector<VertexId> comp = closed_component(d, v);
        done.insert(comp.begin(), comp.end());
        if (!comp.empty()) out.push_back(make(id, dir, {{"v", v}}));
      }
      break;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::S1: return "S1";
    case Rule::S2: return "S2";
    case Rule::S3: return "S3";
    case Rule::PI: return "PI";
    case Rule::C: return "C";
    case Rule::H1: return "H1";
    case Rule::HPF: return "HPF";
    case Rule::BI: return "BI";
    case Rule::H2: return "H2";
    case Rule::EU: return "EU";
    case Rule::HL: return "HL";
    case Rule::C1: return "C1";
    case Rule::C2: return "C2";
    case Rule::L: return "L";
    case Rule::TP: return "TP";
    case Rule::SCALAR: return "SCALAR";
  }
  return "?";
}

std::vector<Rule> basic_rules() {
  return {Rule::S1, Rule::S2,  Rule::S3, Rule::PI, Rule::C,
          Rule::H1, Rule::HPF, Rule::BI, Rule::H2};
}

std::vector<Rule> all_rules() {
  std::vector<Rule> r = basic_rules();
  for (Rule x : {Rule::EU, Rule::HL, Rule::C1, Rule::C2, Rule::L, Rule::TP,
                 Rule::SCALAR})
    r.push_back(x);
  return r;
}

Rule parse_rule(const std::string& name) {
  for (Rule r : all_rules())
    if (rule_name(r) == name) return r;
  throw MalformedInput("unknown rule '" + name + "'");
}

std::string rule_str(const RuleId& id) {
  return rule_name(id.rule) + (id.swapped ? "'" : "");
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::PlainZX: return "plain";
    case Theory::ZXPlusHL: return "hl";
    case Theory::ZXPlusEU: return "eu";
    case Theory::AngleFree: return "angle-free";
  }
  return "?";
}

Theory parse_theory(const std::string& name) {
  for (Theory t : {Theory::PlainZX, Theory::ZXPlusHL, Theory::ZXPlusEU,
                   Theory::AngleFree})
    if (theory_name(t) == name) return t;
  throw MalformedInput("unknown theory '" + name + "'");
}

bool in_theory(Rule r, Theory t) {
  const std::vector<Rule> basic = basic_rules();
  const bool is_basic = std::find(basic.begin(), basic.end(), r) != basic.end();
  switch (t) {
    case Theory::PlainZX:
      return is_basic || r == Rule::C1 || r == Rule::C2 || r == Rule::SCALAR;
    case Theory::ZXPlusHL:
      return r != Rule::EU;
    case Theory::ZXPlusEU:
      return true;
    case Theory::AngleFree:
      if (r == Rule::PI || r == Rule::C) return false;
      return is_basic || r == Rule::C1 || r == Rule::L || r == Rule::HL ||
             r == Rule::SCALAR;
  }
  return false;
}

void require_in_theory(Rule r, Theory t) {
  if (!in_theory(r, t))
    throw TheoryError("rule " + rule_name(r) + " is not available in theory " +
                      theory_name(t));
}

VertexId MatchSite::at(const std::string& key) const {
  auto it = binding.find(key);
  if (it == binding.end())
    throw StaleSite("site of " + rule_str(rule) + " has no binding '" + key +
                    "'");
  return it->second;
}

bool site_valid(const Diagram& d, const MatchSite& site) {
  try {
    return valid_impl(d, site);
  } catch (const StaleSite&) {
    return false;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::vector<MatchSite> find_matches(const Diagram& d, RuleId rule,
                                    Direction dir, Theory theory) {
  require_in_theory(rule.rule, theory);
  std::vector<MatchSite> out;
  for (MatchSite& s : candidates(d, rule, dir))
    if (site_valid(d, s)) out.push_back(std::move(s));
  return out;
}

RewriteResult apply_rule(const Diagram& d, const MatchSite& site,
                         const RewriteOptions& opts) {
  require_in_theory(site.rule.rule, opts.theory);
  if (!site_valid(d, site))
    throw StaleSite("site does not match rule " + rule_str(site.rule));
  RewriteResult res{d, std::nullopt};
  apply_impl(res.diagram, site);
  require_valid(res.diagram);
  if (opts.checked) {
    EqResult eq = eq_up_to(interpret(d), interpret(res.diagram),
                           EqMode::UpToScalar, opts.tol);
    if (!eq.equal)
      throw OracleMismatch("rule " + rule_str(site.rule) +
                           " changed the semantics");
    res.scalar = eq.scalar;
  }
  return res;
}

Diagram generalized_bialgebra(const Diagram& d,
                              const std::vector<VertexId>& x_set,
                              const std::vector<VertexId>& z_set) {
  MatchSite probe;
  probe.rule = RuleId{Rule::BI, false};
  for (std::size_t i = 0; i < z_set.size(); ++i)
    probe.binding["g" + std::to_string(i)] = z_set[i];
  for (std::size_t i = 0; i < x_set.size(); ++i)
    probe.binding["r" + std::to_string(i)] = x_set[i];
  if (!valid_bi_forward(d, probe, Colours{Kind::Z, Kind::X}))
    throw PreconditionError("not a complete bipartite phase-0 block");

  Diagram r = d;
  VertexId x = r.add_vertex(Kind::X);
  VertexId z = r.add_vertex(Kind::Z);
  r.add_edge(x, z);
  for (VertexId g : z_set) {
    for (VertexId h : x_set) r.remove_edge(g, h);
    r.add_edge(g, x);
  }
  for (VertexId h : x_set) r.add_edge(h, z);
  std::vector<VertexId> tidy = z_set;
  tidy.insert(tidy.end(), x_set.begin(), x_set.end());
  tidy.push_back(x);
  tidy.push_back(z);
  for (VertexId v : tidy)
    if (r.has_vertex(v) && r.degree(v) == 2 && r.loop_count(v) == 0) {
      const auto& n = r.neighbours(v);
      if (n[0] == n[1] && r.kind(n[0]) == Kind::H) continue;
      r.splice(v);
    }
  return r;
}

}  // namespace zxp
