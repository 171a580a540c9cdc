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

#include <functional>

#include "zxpivot/errors.hpp"
#include "zxpivot/rules.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {

namespace {

struct Sample {
  std::string label;
  Diagram lhs;
  MatchSite site;
};

// Open legs alternate between inputs and outputs so both sides get used.
class Builder {
 public:
  Diagram d;
  void legs(VertexId v, int k) {
    for (int i = 0; i < k; ++i) {
      VertexId b = (count_++ % 2) ? d.add_input() : d.add_output();
      d.add_edge(b, v);
    }
  }

 private:
  int count_ = 0;
};

const Phase kPhases[] = {Phase(0), Phase(1, 2), Phase(1), Phase(3, 2)};

MatchSite site(RuleId id, std::map<std::string, VertexId> b,
               Direction dir = Direction::Forward) {
  MatchSite s;
  s.rule = id;
  s.direction = dir;
  s.binding = std::move(b);
  return s;
}

std::string tag(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

std::vector<Sample> samples(RuleId id, int max_arity) {
  const Kind g = id.swapped ? Kind::X : Kind::Z;
  const Kind r = other_colour(g);
  std::vector<Sample> out;
  auto add = [&](std::string label, Builder& b, MatchSite s) {
    out.push_back({std::move(label), std::move(b.d), std::move(s)});
  };

  switch (id.rule) {
    case Rule::S1:
      for (int ka = 0; ka < max_arity; ++ka)
        for (int kb = 0; kb < max_arity; ++kb)
          for (Phase pa : kPhases)
            for (Phase pb : kPhases)
              for (int joins = 1; joins <= 2; ++joins) {
                if (joins == 2 && (ka + kb) > 3) continue;
                Builder b;
                VertexId a = b.d.add_vertex(g, pa), c = b.d.add_vertex(g, pb);
                for (int j = 0; j < joins; ++j) b.d.add_edge(a, c);
                b.legs(a, ka);
                b.legs(c, kb);
                add(tag({"arity " + std::to_string(ka + joins) + "/" +
                             std::to_string(kb + joins),
                         pa.str(), pb.str(), "joins " + std::to_string(joins)}),
                    b, site(id, {{"a", a}, {"b", c}}));
              }
      break;
    case Rule::S2:
      for (int k = 0; k + 2 <= max_arity; ++k)
        for (Phase p : kPhases) {
          Builder b;
          VertexId v = b.d.add_vertex(g, p);
          b.d.add_edge(v, v);
          b.legs(v, k);
          add(tag({"arity " + std::to_string(k), p.str()}), b,
              site(id, {{"s", v}}));
        }
      break;
    case Rule::S3: {
      Builder b;
      VertexId v = b.d.add_vertex(g);
      b.legs(v, 2);
      add("wire", b, site(id, {{"s", v}}));
      for (Phase p : kPhases) {
        Builder b2;
        VertexId x = b2.d.add_vertex(r, p), y = b2.d.add_vertex(g, p);
        VertexId m = b2.d.add_vertex(g);
        b2.d.add_edge(x, m);
        b2.d.add_edge(m, y);
        b2.legs(x, 2);
        b2.legs(y, 1);
        add(tag({"between spiders", p.str()}), b2, site(id, {{"s", m}}));
      }
      break;
    }
    case Rule::PI:
    case Rule::C2:
      for (int k = 0; k < max_arity; ++k)
        for (Phase p : kPhases) {
          if (id.rule == Rule::C2 && !p.is_zero()) continue;
          Builder b;
          VertexId v = b.d.add_vertex(g, p);
          VertexId x = b.d.add_vertex(r, Phase::pi());
          b.d.add_edge(v, x);
          b.legs(x, 1);
          b.legs(v, k);
          add(tag({"arity " + std::to_string(k + 1), p.str()}), b,
              site(id, {{"s", v}, {"x", x}}));
        }
      break;
    case Rule::C:
    case Rule::C1:
      for (int k = 0; k < max_arity; ++k)
        for (Phase p : kPhases) {
          Builder b;
          VertexId v = b.d.add_vertex(g, p);
          VertexId u = b.d.add_vertex(
              r, id.rule == Rule::C ? Phase() : Phase::pi());
          b.d.add_edge(v, u);
          b.legs(v, k);
          add(tag({"arity " + std::to_string(k + 1), p.str()}), b,
              site(id, {{"s", v}, {"u", u}}));
        }
      break;
    case Rule::H1:
      for (int k = 0; k <= max_arity; ++k)
        for (Phase p : kPhases) {
          Builder b;
          VertexId v = b.d.add_vertex(g, p);
          for (int i = 0; i < k; ++i) {
            VertexId h = b.d.add_vertex(Kind::H);
            b.d.add_edge(v, h);
            b.legs(h, 1);
          }
          add(tag({"arity " + std::to_string(k), p.str()}), b,
              site(id, {{"s", v}}));
        }
      break;
    case Rule::HPF:
      for (int ka = 0; ka + 2 <= max_arity; ++ka)
        for (int kb = 0; kb + 2 <= max_arity; ++kb)
          for (Phase pa : kPhases)
            for (Phase pb : kPhases) {
              Builder b;
              VertexId a = b.d.add_vertex(g, pa), c = b.d.add_vertex(r, pb);
              b.d.add_edge(a, c);
              b.d.add_edge(a, c);
              b.legs(a, ka);
              b.legs(c, kb);
              add(tag({"arity " + std::to_string(ka + 2) + "/" +
                           std::to_string(kb + 2),
                       pa.str(), pb.str()}),
                  b, site(id, {{"a", a}, {"b", c}}));
            }
      break;
    case Rule::BI:
      for (int m = 1; m < max_arity; ++m)
        for (int n = 1; n < max_arity; ++n)
          for (int ext = 0; ext <= 2; ++ext) {
            if (m + ext > max_arity || n + ext > max_arity) continue;
            Builder b;
            std::map<std::string, VertexId> bind;
            std::vector<VertexId> gs, rs;
            for (int i = 0; i < m; ++i) {
              gs.push_back(b.d.add_vertex(g));
              bind["g" + std::to_string(i)] = gs.back();
            }
            for (int j = 0; j < n; ++j) {
              rs.push_back(b.d.add_vertex(r));
              bind["r" + std::to_string(j)] = rs.back();
            }
            for (VertexId x : gs)
              for (VertexId y : rs) b.d.add_edge(x, y);
            for (VertexId x : gs) b.legs(x, ext);
            for (VertexId y : rs) b.legs(y, ext);
            add(tag({"block " + std::to_string(m) + "x" + std::to_string(n),
                     "external " + std::to_string(ext)}),
                b, site(id, bind));
          }
      break;
    case Rule::H2: {
      Builder b;
      VertexId h0 = b.d.add_vertex(Kind::H), h1 = b.d.add_vertex(Kind::H);
      b.d.add_edge(h0, h1);
      b.legs(h0, 1);
      b.legs(h1, 1);
      add("wire", b, site(id, {{"h0", h0}, {"h1", h1}}));
      break;
    }
    case Rule::EU: {
      Builder b;
      VertexId h = b.d.add_vertex(Kind::H);
      b.legs(h, 2);
      add("wire", b, site(id, {{"h", h}}));
      break;
    }
    case Rule::HL:
      for (int k = 0; k <= max_arity; ++k) {
        Builder b;
        VertexId v = b.d.add_vertex(g, Phase::pi());
        b.legs(v, k);
        add("arity " + std::to_string(k), b, site(id, {{"s", v}}));
      }
      break;
    case Rule::L:
      for (int k = 0; k < max_arity; ++k) {
        Builder b;
        VertexId v = b.d.add_vertex(g);
        VertexId x = b.d.add_vertex(r);
        VertexId h = b.d.add_vertex(Kind::H);
        b.d.add_edge(x, h);
        b.d.add_edge(x, h);
        b.d.add_edge(v, x);
        b.legs(x, 1);
        b.legs(v, k);
        add("arity " + std::to_string(k + 1), b,
            site(id, {{"s", v}, {"x", x}}));
      }
      break;
    case Rule::TP:
      for (int k = 0; k < max_arity; ++k)
        for (Phase p : kPhases) {
          Builder b;
          VertexId u = b.d.add_vertex(g), v = b.d.add_vertex(g);
          VertexId w = b.d.add_vertex(g, p);
          std::map<std::string, VertexId> bind{{"u", u}, {"v", v}, {"w", w}};
          auto link = [&](VertexId a, VertexId c, const char* key) {
            VertexId h = b.d.add_vertex(Kind::H);
            b.d.add_edge(a, h);
            b.d.add_edge(h, c);
            bind[key] = h;
          };
          link(u, v, "huv");
          link(u, w, "huw");
          link(v, w, "hvw");
          b.legs(w, k);
          add(tag({"arity " + std::to_string(k), p.str()}), b,
              site(id, bind));
        }
      break;
    case Rule::SCALAR:
      for (Phase p : kPhases) {
        if (p.is_pi()) continue;
        Builder b;
        VertexId v = b.d.add_vertex(g, p);
        VertexId w = b.d.add_vertex(r);
        b.legs(w, 2);
        add(tag({"closed spider", p.str()}), b, site(id, {{"v", v}}));
      }
      break;
  }
  return out;
}

bool same(const DenseMatrix& a, const DenseMatrix& b, double tol,
          std::optional<cplx>* scalar = nullptr) {
  EqResult r = eq_up_to(a, b, EqMode::UpToScalar, tol);
  if (scalar) *scalar = r.scalar;
  return r.equal;
}

}  // namespace

bool RuleReport::sound_standard() const {
  for (const auto& i : instances)
    if (!i.standard) return false;
  return !instances.empty();
}

bool RuleReport::sound_zero() const {
  for (const auto& i : instances)
    if (!i.zero) return false;
  return !instances.empty();
}

bool RuleReport::sound_flat() const {
  for (const auto& i : instances)
    if (!i.flat) return false;
  return !instances.empty();
}

RuleReport verify_rule(RuleId rule, int max_arity, double tol) {
  RuleReport report{rule, {}};
  RewriteOptions opts;
  opts.theory = Theory::ZXPlusEU;
  for (Sample& s : samples(rule, max_arity)) {
    Diagram rhs = apply_rule(s.lhs, s.site, opts).diagram;
    InstanceCheck c;
    c.label = s.label;
    c.standard = same(interpret(s.lhs), interpret(rhs), tol, &c.scalar);
    c.zero = same(interpret_zero(s.lhs), interpret_zero(rhs), tol);
    c.flat = same(interpret(flatten(s.lhs)), interpret(flatten(rhs)), tol);
    report.instances.push_back(std::move(c));
  }
  return report;
}

}  // namespace zxp
