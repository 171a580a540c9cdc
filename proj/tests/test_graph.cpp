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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "zxpivot/errors.hpp"
#include "zxpivot/graph.hpp"
#include "zxpivot/graphstate.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {
namespace test_graph {

using oracle::proportional;

std::vector<std::pair<std::string, std::string>> ordered_pairs(
    const SimpleGraph& g, bool adjacent_only) {
  std::vector<std::pair<std::string, std::string>> r;
  for (const auto& u : g.vertices())
    for (const auto& v : g.vertices())
      if (u != v && (!adjacent_only || g.has_edge(u, v))) r.emplace_back(u, v);
  return r;
}

// Product of single-qubit ops over the labels of g.
DenseMatrix product(const SimpleGraph& g,
                    const std::map<std::string, DenseMatrix>& ops) {
  DenseMatrix r = DenseMatrix::scalar(1);
  for (const auto& v : g.vertices()) {
    auto it = ops.find(v);
    r = oracle::kron2(r, it == ops.end() ? oracle::ident() : it->second);
  }
  return r;
}

DenseMatrix rot(const DenseMatrix& pauli, double theta) {
  return oracle::ident() * std::cos(theta) +
         pauli * cplx(0, -std::sin(theta));
}

TEST_CASE("connected labelled graph counts") {
  const std::size_t want[] = {1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n)
    CHECK(all_graphs(n, true).size() == want[n - 1]);
  CHECK(all_graphs(4, false).size() == 64);
}

TEST_CASE("local complementation and pivoting") {
  for (int n = 2; n <= 5; ++n)
    for (const SimpleGraph& g : all_graphs(n, true)) {
      for (const auto& v : g.vertices()) {
        CHECK(local_complement(g, v) == oracle::lc(g, v));
        CHECK(local_complement(local_complement(g, v), v) == g);
      }
      for (const auto& [u, v] : ordered_pairs(g, true)) {
        SimpleGraph p = pivot(g, u, v);
        CHECK(p == oracle::lc(oracle::lc(oracle::lc(g, u), v), u));
        CHECK(p == pivot(g, v, u));
        CHECK(pivot(p, u, v) == g);
      }
    }
}

TEST_CASE("pivoting a bipartite graph keeps it bipartite") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    SimpleGraph g = random_bipartite_graph(1 + i % 4, 1 + (i / 4) % 4, 0.5, rng);
    REQUIRE(is_bipartite(g));
    for (const auto& [u, v] : ordered_pairs(g, true))
      CHECK(is_bipartite(pivot(g, u, v)));
  }
  SimpleGraph tri(default_labels(3));
  tri.add_edge("v0", "v1");
  tri.add_edge("v1", "v2");
  tri.add_edge("v0", "v2");
  CHECK_FALSE(is_bipartite(tri));
}

TEST_CASE("edge operations") {
  SimpleGraph g(default_labels(3));
  CHECK_THROWS_AS(g.add_edge("v0", "v0"), PreconditionError);
  g.toggle_edge("v0", "v1");
  CHECK(g.has_edge("v1", "v0"));
  g.toggle_edge("v0", "v1");
  CHECK(g.edge_count() == 0);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("graph-state diagrams denote graph states") {
  for (int n = 1; n <= 4; ++n)
    for (const SimpleGraph& g : all_graphs(n, false)) {
      LabelledState s = graph_state_diagram(g);
      CHECK(s.labels == g.vertices());
      CHECK(proportional(interpret(s.diagram), oracle::graph_state(g)));
      CHECK(proportional(graph_state_vector(g), oracle::graph_state(g)));
      auto back = recognize_graph_state(s.diagram, s.labels);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
}

TEST_CASE("stabilizer, local complementation and pivot identities") {
  DenseMatrix X = oracle::pauli_x(), Z = oracle::pauli_z();
  const double q = std::numbers::pi / 4;
  for (int n = 2; n <= 4; ++n)
    for (const SimpleGraph& g : all_graphs(n, true)) {
      DenseMatrix psi = oracle::graph_state(g);
      for (const auto& v : g.vertices()) {
        std::map<std::string, DenseMatrix> k{{v, X}};
        for (const auto& w : g.neighbours(v)) k[w] = Z;
        CHECK(eq_up_to(product(g, k) * psi, psi, EqMode::Exact).equal);
        CHECK(check_stabilizer(g, v));

        std::map<std::string, DenseMatrix> lc{{v, rot(X, q)}};
        for (const auto& w : g.neighbours(v)) lc[w] = rot(Z, -q);
        CHECK(proportional(product(g, lc) * psi,
                           oracle::graph_state(oracle::lc(g, v))));
        CHECK(check_vdn(g, v));
        CHECK(proportional(word_matrix(vdn_word(g, v), g.vertices()) * psi,
                           oracle::graph_state(local_complement(g, v))));
      }
      for (const auto& [u, v] : ordered_pairs(g, true)) {
        std::map<std::string, DenseMatrix> p{{u, oracle::hadamard()},
                                             {v, oracle::hadamard()}};
        for (const auto& w : g.neighbours(u))
          if (g.neighbours(v).count(w)) p[w] = Z;
        CHECK(proportional(product(g, p) * psi,
                           oracle::graph_state(pivot(g, u, v))));
        CHECK(check_pivot_property(g, u, v));
      }
    }
}

TEST_CASE("recognition rejects other diagrams") {
  SimpleGraph g(default_labels(2));
  g.add_edge("v0", "v1");
  LabelledState s = graph_state_diagram(g);
  Diagram d = compose(s.diagram, tensor(diagrams::hadamard(), diagrams::wire()));
  CHECK_FALSE(recognize_graph_state(d, s.labels).has_value());
}

}  // namespace test_graph
}  // namespace zxp
