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

#include "zxpivot/semantics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "zxpivot/errors.hpp"

namespace zxp {

namespace {

// e^{i p}, exact for multiples of pi/2.
cplx unit(Phase p) {
  if (p.den() == 1) return p.is_zero() ? 1.0 : -1.0;
  if (p.den() == 2) return p.num() == 1 ? cplx(0, 1) : cplx(0, -1);
  return std::polar(1.0, p.radians());
}

// Tensor of a vertex whose legs carry the given labels; repeated labels
// (self-loops) force equal values on both ends.
tn::Tensor vertex_tensor(const Vertex& v, const std::vector<int>& legs) {
  std::vector<int> labels;
  for (int l : legs)
    if (std::find(labels.begin(), labels.end(), l) == labels.end())
      labels.push_back(l);
  const std::size_t r = labels.size();
  std::vector<int> slot(legs.size());
  for (std::size_t j = 0; j < legs.size(); ++j)
    slot[j] = static_cast<int>(
        std::find(labels.begin(), labels.end(), legs[j]) - labels.begin());
  const double k = static_cast<double>(legs.size());
  const cplx phase = unit(v.phase);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  tn::Tensor t{labels, std::vector<cplx>(std::size_t{1} << r)};
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    int ones = 0;
    for (std::size_t j = 0; j < legs.size(); ++j)
      ones += static_cast<int>(idx >> (r - 1 - slot[j]) & 1);
    switch (v.kind) {
      case Kind::Z:
        if (legs.empty())
          t.data[idx] = 1.0 + phase;
        else if (ones == 0)
          t.data[idx] = 1.0;
        else if (ones == static_cast<int>(legs.size()))
          t.data[idx] = phase;
        break;
      case Kind::X: {
        double sign = (ones % 2) ? -1.0 : 1.0;
        t.data[idx] = std::pow(inv_sqrt2, k) * (1.0 + phase * sign);
        break;
      }
      case Kind::H:
        t.data[idx] = (ones == 2 ? -1.0 : 1.0) * inv_sqrt2;
        break;
      case Kind::B:
        throw ZxError("boundary vertices carry no tensor");
    }
  }
  return t;
}

}  // namespace

DenseMatrix interpret(const Diagram& d, tn::Exec exec) {
  require_valid(d);
  // one label per edge
  std::map<VertexId, std::vector<int>> legs;
  std::map<VertexId, int> boundary_label;
  int label = 0;
  for (const Edge& e : d.edges()) {
    legs[e.a].push_back(label);
    legs[e.b].push_back(label);
    if (d.kind(e.a) == Kind::B) boundary_label[e.a] = label;
    if (d.kind(e.b) == Kind::B) boundary_label[e.b] = label;
    ++label;
  }
  std::vector<tn::Tensor> tensors;
  tensors.reserve(d.vertex_count());
  for (const auto& [v, l] : legs)
    if (d.kind(v) != Kind::B) tensors.push_back(vertex_tensor(d.vertex(v), l));
  for (VertexId v : d.vertex_ids())
    if (d.degree(v) == 0) tensors.push_back(vertex_tensor(d.vertex(v), {}));
  std::vector<int> open;
  for (const auto& [v, l] : boundary_label) open.push_back(l);
  tn::Tensor t = tn::contract_network(std::move(tensors), open, exec);

  const int m = d.num_outputs(), n = d.num_inputs();
  std::vector<int> bl;
  for (VertexId v : d.outputs()) bl.push_back(boundary_label.at(v));
  for (VertexId v : d.inputs()) bl.push_back(boundary_label.at(v));
  // bit of the tensor index addressed by each boundary; a label missing from
  // t joins two boundaries directly, which forces their bits to agree
  const int total = m + n;
  std::vector<std::size_t> mask(total, 0);
  std::vector<std::pair<int, int>> tied;
  for (int j = 0; j < total; ++j) {
    auto it = std::find(t.labels.begin(), t.labels.end(), bl[j]);
    if (it != t.labels.end())
      mask[j] = std::size_t{1} << (t.labels.end() - it - 1);
    for (int k = 0; k < j; ++k)
      if (bl[k] == bl[j]) tied.emplace_back(k, j);
  }
  DenseMatrix out(std::size_t{1} << m, std::size_t{1} << n);
  for (std::size_t full = 0; full < (std::size_t{1} << total); ++full) {
    bool ok = true;
    for (auto [k, j] : tied)
      if (((full >> (total - 1 - k)) ^ (full >> (total - 1 - j))) & 1)
        ok = false;
    if (!ok) continue;
    std::size_t idx = 0;
    for (int j = 0; j < total; ++j)
      if (full >> (total - 1 - j) & 1) idx |= mask[j];
    out(full >> n, full & ((std::size_t{1} << n) - 1)) = t.data[idx];
  }
  return out;
}

DenseMatrix interpret_zero(const Diagram& d) {
  Diagram z = d;
  for (VertexId v : z.vertex_ids())
    if (is_spider(z.kind(v))) z.set_phase(v, Phase());
  return interpret(z);
}

Diagram flatten(const Diagram& d) {
  require_valid(d);
  Diagram f;
  // copies[v][c] is the image of v in copy c; H boxes get two vertices
  // that are wired crosswise below
  std::map<VertexId, std::array<VertexId, 2>> copies;
  for (VertexId v : d.vertex_ids()) {
    switch (d.kind(v)) {
      case Kind::B:
        copies[v] = {f.add_vertex(Kind::B), f.add_vertex(Kind::B)};
        break;
      case Kind::Z:
        copies[v] = {f.add_vertex(Kind::Z), f.add_vertex(Kind::X)};
        break;
      case Kind::X:
        copies[v] = {f.add_vertex(Kind::X), f.add_vertex(Kind::Z)};
        break;
      case Kind::H:
        copies[v] = {f.add_vertex(Kind::Z), f.add_vertex(Kind::Z)};
        break;
    }
  }
  std::map<VertexId, int> h_leg;
  auto end = [&](VertexId v, int c) {
    if (d.kind(v) != Kind::H) return copies[v][c];
    // first leg: copy c on vertex c; second leg: copy c on vertex 1 - c
    int leg = h_leg[v]++;
    return leg % 4 < 2 ? copies[v][c] : copies[v][1 - c];
  };
  for (const Edge& e : d.edges())
    for (int c = 0; c < 2; ++c) {
      VertexId a = end(e.a, c);
      VertexId b = end(e.b, c);
      f.add_edge(a, b);
    }
  for (VertexId v : d.inputs()) {
    f.declare_input(copies[v][0]);
    f.declare_input(copies[v][1]);
  }
  for (VertexId v : d.outputs()) {
    f.declare_output(copies[v][0]);
    f.declare_output(copies[v][1]);
  }
  for (VertexId v : f.vertex_ids()) {
    if (!is_spider(f.kind(v)) || f.degree(v) != 2 || f.loop_count(v) != 0)
      continue;
    f.splice(v);
  }
  return f;
}

}  // namespace zxp
