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

#include "zxpivot/json_io.hpp"

#include <fstream>

#include "zxpivot/errors.hpp"

namespace zxp {

namespace {

VertexId parse_id(const json& j) {
  if (!j.is_string()) throw MalformedInput("vertex id must be a string");
  const std::string s = j.get<std::string>();
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || v < 0)
    throw MalformedInput("vertex id '" + s + "' is not a non-negative integer");
  return static_cast<VertexId>(v);
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::Z, Kind::X, Kind::H, Kind::B})
    if (kind_name(k) == s) return k;
  throw MalformedInput("unknown vertex kind '" + s + "'");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInput(e.what());
  }
}

Direction parse_direction(const std::string& s) {
  if (s == "forward") return Direction::Forward;
  if (s == "backward") return Direction::Backward;
  throw MalformedInput("unknown direction '" + s + "'");
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json j;
  j["vertices"] = json::object();
  for (VertexId v : d.vertex_ids()) {
    json e{{"kind", kind_name(d.kind(v))}};
    if (is_spider(d.kind(v))) e["phase"] = d.phase(v).str();
    j["vertices"][std::to_string(v)] = e;
  }
  j["edges"] = json::array();
  for (const Edge& e : d.edges())
    j["edges"].push_back({std::to_string(e.a), std::to_string(e.b)});
  j["inputs"] = json::array();
  for (VertexId v : d.inputs()) j["inputs"].push_back(std::to_string(v));
  j["outputs"] = json::array();
  for (VertexId v : d.outputs()) j["outputs"].push_back(std::to_string(v));
  return j;
}

Diagram diagram_from_json(const json& j) {
  return guarded([&] {
    Diagram d;
    const json& vs = field(j, "vertices");
    if (!vs.is_object()) throw MalformedInput("'vertices' must be an object");
    for (const auto& [key, val] : vs.items()) {
      Kind k = parse_kind(field(val, "kind").get<std::string>());
      Phase p;
      if (val.contains("phase")) {
        if (!is_spider(k))
          throw MalformedInput("vertex " + key + " of kind " + kind_name(k) +
                               " cannot carry a phase");
        p = Phase::parse(val.at("phase").get<std::string>());
      }
      d.add_vertex_with_id(parse_id(json(key)), k, p);
    }
    for (const json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2)
        throw MalformedInput("edge must be a pair of ids");
      VertexId a = parse_id(e[0]), b = parse_id(e[1]);
      if (!d.has_vertex(a) || !d.has_vertex(b))
        throw MalformedInput("edge has an undeclared end");
      d.add_edge(a, b);
    }
    for (const json& v : field(j, "inputs")) d.declare_input(parse_id(v));
    for (const json& v : field(j, "outputs")) d.declare_output(parse_id(v));
    require_valid(d);
    d.reset_id_counter();
    return d;
  });
}

json graph_to_json(const SimpleGraph& g) {
  json j{{"vertices", g.vertices()}, {"edges", json::array()}};
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

SimpleGraph graph_from_json(const json& j) {
  return guarded([&] {
    SimpleGraph g;
    for (const json& v : field(j, "vertices")) g.add_vertex(v.get<std::string>());
    for (const json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2)
        throw MalformedInput("edge must be a pair of labels");
      std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
      if (!g.has_vertex(a) || !g.has_vertex(b) || a == b)
        throw MalformedInput("bad edge " + a + "-" + b);
      g.add_edge(a, b);
    }
    return g;
  });
}

json gs_rlc_to_json(const GsRlcDiagram& g) {
  json j{{"graph", graph_to_json(g.graph)}, {"ops", json::object()},
         {"reduced", g.reduced}};
  for (const auto& [v, c] : g.ops) j["ops"][v] = c.str();
  if (g.zero) j["zero"] = true;
  return j;
}

GsRlcDiagram gs_rlc_from_json(const json& j) {
  return guarded([&] {
    GsRlcDiagram g;
    g.graph = graph_from_json(field(j, "graph"));
    for (const std::string& v : g.graph.vertices()) g.ops[v] = {};
    for (const auto& [v, op] : field(j, "ops").items()) {
      if (!g.graph.has_vertex(v))
        throw MalformedInput("operator on unknown vertex " + v);
      g.ops[v] = RealClifford::parse(op.get<std::string>());
    }
    g.reduced = j.value("reduced", false);
    g.zero = j.value("zero", false);
    if (g.reduced && !is_reduced(g))
      throw MalformedInput("diagram flagged reduced is not reduced");
    return g;
  });
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw MalformedInput("matrix needs rows");
    std::size_t cols = j[0].size();
    std::vector<cplx> data;
    for (const json& row : j) {
      if (!row.is_array() || row.size() != cols)
        throw MalformedInput("ragged matrix");
      for (const json& z : row) {
        if (!z.is_array() || z.size() != 2)
          throw MalformedInput("matrix entry must be [re, im]");
        data.emplace_back(z[0].get<double>(), z[1].get<double>());
      }
    }
    return DenseMatrix(j.size(), cols, std::move(data));
  });
}

json site_to_json(const MatchSite& s) {
  json j{{"rule", rule_name(s.rule.rule)},
         {"swapped", s.rule.swapped},
         {"direction",
          s.direction == Direction::Forward ? "forward" : "backward"},
         {"site", json::object()}};
  for (const auto& [k, v] : s.binding) j["site"][k] = std::to_string(v);
  if (!s.legs.empty()) {
    j["legs"] = json::array();
    for (VertexId v : s.legs) j["legs"].push_back(std::to_string(v));
  }
  if (!s.phase.is_zero()) j["phase"] = s.phase.str();
  return j;
}

MatchSite site_from_json(const json& j) {
  return guarded([&] {
    MatchSite s;
    s.rule.rule = parse_rule(field(j, "rule").get<std::string>());
    s.rule.swapped = j.value("swapped", false);
    s.direction = parse_direction(j.value("direction", "forward"));
    for (const auto& [k, v] : field(j, "site").items())
      s.binding[k] = parse_id(v);
    if (j.contains("legs"))
      for (const json& v : j.at("legs")) s.legs.push_back(parse_id(v));
    if (j.contains("phase"))
      s.phase = Phase::parse(j.at("phase").get<std::string>());
    return s;
  });
}

json trace_to_json(const Trace& t) {
  json steps = json::array();
  for (const TraceStep& st : t.steps) {
    json e = site_to_json(st.site);
    e["stage"] = st.stage;
    if (st.scalar) e["scalar"] = {st.scalar->real(), st.scalar->imag()};
    steps.push_back(e);
  }
  return json{{"theory", theory_name(t.theory)},
              {"start", diagram_to_json(t.start)},
              {"result", diagram_to_json(t.result)},
              {"steps", steps}};
}

Trace trace_from_json(const json& j) {
  return guarded([&] {
    Trace t;
    t.theory = parse_theory(field(j, "theory").get<std::string>());
    t.start = diagram_from_json(field(j, "start"));
    t.result = diagram_from_json(field(j, "result"));
    for (const json& e : field(j, "steps")) {
      TraceStep st{site_from_json(e), e.value("stage", ""), std::nullopt};
      if (e.contains("scalar"))
        st.scalar = cplx(e["scalar"][0].get<double>(),
                         e["scalar"][1].get<double>());
      t.steps.push_back(std::move(st));
    }
    return t;
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

}  // namespace zxp
