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
#include <random>

#include "oracle.hpp"
#include "zxpivot/derivations.hpp"
#include "zxpivot/errors.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {
namespace test_derivations {

using oracle::proportional;

SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<std::string> l = default_labels(n);
  SimpleGraph g(l);
  for (auto [a, b] : edges) g.add_edge(l[a], l[b]);
  return g;
}

// Runs derive_pivot and checks the result against the pivoted graph.
void check_pivot(const SimpleGraph& g, const std::string& u,
                 const std::string& v, bool checked) {
  LabelledState in = pivot_input(g, u, v);
  SimpleGraph want = pivot(g, u, v);
  CHECK(proportional(interpret(in.diagram), oracle::graph_state(want)));
  Trace t = derive_pivot(in, u, v, Theory::ZXPlusHL, checked);
  auto got = recognize_graph_state(t.result, g.vertices());
  REQUIRE(got.has_value());
  CHECK(*got == want);
  CHECK(t.start == in.diagram);
  for (const TraceStep& s : t.steps)
    CHECK(in_theory(s.site.rule.rule, Theory::ZXPlusHL));
}

TEST_CASE("pivot derivations on named graphs") {
  SUBCASE("single edge") { check_pivot(from_edges(2, {{0, 1}}), "v0", "v1", true); }
  SUBCASE("path") {
    check_pivot(from_edges(4, {{0, 1}, {1, 2}, {2, 3}}), "v1", "v2", true);
  }
  SUBCASE("triangle") {
    check_pivot(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}), "v0", "v1", true);
  }
  SUBCASE("four-cycle") {
    check_pivot(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), "v0", "v1",
                true);
  }
  SUBCASE("complete graph") {
    check_pivot(from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                "v2", "v3", true);
  }
}

TEST_CASE("pivot derivations on every connected graph up to four vertices") {
  for (int n = 2; n <= 4; ++n)
    for (const SimpleGraph& g : all_graphs(n, true))
      for (const auto& [u, v] : g.edges()) check_pivot(g, u, v, true);
}

TEST_CASE("pivot derivations on random six-vertex graphs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    SimpleGraph g = random_connected_graph(6, 0.5, rng);
    auto edges = g.edges();
    auto [u, v] = edges[rng() % edges.size()];
    check_pivot(g, u, v, false);
  }
}

TEST_CASE("pivot derivations respect the theory") {
  SimpleGraph tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  LabelledState in = pivot_input(tri, "v0", "v1");
  CHECK_THROWS_AS(derive_pivot(in, "v0", "v1", Theory::PlainZX),
                  TheoryError);
  CHECK_THROWS_AS(derive_pivot_no_common(in, "v0", "v1"), PreconditionError);

  SimpleGraph path = from_edges(3, {{0, 1}, {1, 2}});
  Trace t = derive_pivot(pivot_input(path, "v0", "v1"), "v0", "v1",
                         Theory::PlainZX);
  for (const TraceStep& s : t.steps)
    CHECK(in_theory(s.site.rule.rule, Theory::PlainZX));

  CHECK_THROWS_AS(derive_pivot(graph_state_diagram(path), "v0", "v1"),
                  PreconditionError);
}

TEST_CASE("replaying a trace reproduces its result") {
  SimpleGraph g = from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  Trace t = derive_pivot(pivot_input(g, "v0", "v2"), "v0", "v2");
  Trace r = replay(t, true);
  CHECK(r.result == t.result);
  CHECK(r.steps.size() == t.steps.size());

  Trace bad = t;
  bad.result = bad.start;
  CHECK_THROWS_AS(replay(bad, false), PreconditionError);

  Trace wrong_theory = t;
  wrong_theory.theory = Theory::PlainZX;
  CHECK_THROWS_AS(replay(wrong_theory, false), TheoryError);
}

// [[start]] = total_scalar * [[result]] for a fully checked trace.
void check_scalar(const Trace& t) {
  DenseMatrix scaled = interpret(t.result) * t.total_scalar();
  CHECK(eq_up_to(scaled, interpret(t.start), EqMode::Exact, 1e-9).equal);
}

TEST_CASE("the H-loop reduces to a pi rotation through a triangle pivot") {
  Trace t = derive_hl_from_triangle_pivot();
  CHECK(t.stages().size() == 7);
  CHECK(compact_ids(t.start) == compact_ids(h_loop_diagram()));
  CHECK(compact_ids(t.result) == pi_rotation_diagram());
  for (const TraceStep& s : t.steps) {
    CHECK(s.site.rule.rule != Rule::HL);
    CHECK(s.site.rule.rule != Rule::EU);
    REQUIRE(s.scalar.has_value());
  }
  check_scalar(t);
  CHECK(std::abs(t.total_scalar() - 1 / std::sqrt(2.0)) < 1e-9);
  CHECK(replay(t).result == t.result);
}

TEST_CASE("the H-loop reduces to a pi rotation through Euler decomposition") {
  Trace t = derive_hl_from_eu();
  CHECK(t.stages().size() == 4);
  CHECK(compact_ids(t.result) == pi_rotation_diagram());
  bool used_eu = false;
  for (const TraceStep& s : t.steps) {
    used_eu |= s.site.rule.rule == Rule::EU;
    CHECK(in_theory(s.site.rule.rule, Theory::ZXPlusEU));
  }
  CHECK(used_eu);
  check_scalar(t);
  CHECK_THROWS_AS(derive_hl_from_eu(Theory::ZXPlusHL), TheoryError);
}

TEST_CASE("single-colour diagrams fuse to one spider") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Diagram d = random_single_colour_diagram(seed);
    Trace t = reduce_single_colour(d);
    CHECK(is_single_spider(t.result));
    CHECK(proportional(interpret(t.result), interpret(d)));
    for (const TraceStep& s : t.steps) {
      Rule r = s.site.rule.rule;
      CHECK((r == Rule::S1 || r == Rule::S2));
    }
  }
}

TEST_CASE("H-free diagrams reduce to simple bipartite form") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Diagram d = random_h_free_diagram(seed);
    Trace t = reduce_to_bipartite(d);
    CHECK(is_simple_bipartite(t.result));
    CHECK(proportional(interpret(t.result), interpret(d)));
  }
}

TEST_CASE("eliminating a colour leaves only the other one") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Diagram d = random_h_free_diagram(seed);
    for (Kind k : {Kind::Z, Kind::X}) {
      Trace t = eliminate_colour(d, k);
      for (VertexId v : t.result.vertex_ids()) CHECK(t.result.kind(v) != k);
      CHECK(proportional(interpret(t.result), interpret(d)));
    }
  }
}

TEST_CASE("Derivation reports created vertices") {
  Derivation d(diagrams::spider(Kind::X, 1, 1, Phase(1, 2)), Theory::PlainZX);
  VertexId s = -1;
  for (VertexId v : d.diagram().vertex_ids())
    if (d.diagram().kind(v) == Kind::X) s = v;
  auto created = d.backward(Rule::H1, {{"s", s}}, "colour");
  CHECK(created.size() == 2);
  for (VertexId v : created) CHECK(d.diagram().kind(v) == Kind::H);
  CHECK(d.trace().steps.size() == 1);
  CHECK(d.trace().stages() == std::vector<std::string>{"colour"});
}

}  // namespace test_derivations
}  // namespace zxp
