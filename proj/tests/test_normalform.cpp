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

#include <random>

#include "oracle.hpp"
#include "zxpivot/errors.hpp"
#include "zxpivot/normalform.hpp"
#include "zxpivot/rules.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {
namespace test_normalform {

using oracle::proportional;

DenseMatrix clifford(bool h, bool x, bool z) {
  DenseMatrix m = oracle::ident();
  if (h) m = m * oracle::hadamard();
  if (x) m = m * oracle::pauli_x();
  if (z) m = m * oracle::pauli_z();
  return m;
}

bool up_to_sign(const DenseMatrix& a, const DenseMatrix& b) {
  return eq_up_to(a, b, EqMode::Exact).equal ||
         eq_up_to(a, b * -1.0, EqMode::Exact).equal;
}

TEST_CASE("real Clifford bookkeeping") {
  for (int bits = 0; bits < 8; ++bits) {
    RealClifford c{bool(bits & 4), bool(bits & 2), bool(bits & 1)};
    DenseMatrix m = clifford(c.h, c.x, c.z);
    CHECK(eq_up_to(c.matrix(), m, EqMode::Exact).equal);
    CHECK(up_to_sign(c.then_z().matrix(), m * oracle::pauli_z()));
    CHECK(up_to_sign(c.then_x().matrix(), m * oracle::pauli_x()));
    CHECK(up_to_sign(c.then_h().matrix(), m * oracle::hadamard()));
    CHECK(RealClifford::parse(c.str()) == c);
    CHECK(c.local_op().has_value() == !c.x);
  }
  CHECK(RealClifford{}.str() == "I");
  CHECK(RealClifford{true, false, true}.str() == "HZ");
  CHECK(*RealClifford{true, false, true}.local_op() == RealLocalOp::HZ);
  CHECK_THROWS_AS(RealClifford::parse("ZH"), MalformedInput);
}

// Independent dense vector of a GS-RLC diagram.
DenseMatrix gs_rlc_oracle(const GsRlcDiagram& g) {
  DenseMatrix ops = DenseMatrix::scalar(1);
  for (const auto& v : g.labels()) {
    auto it = g.ops.find(v);
    RealClifford c = it == g.ops.end() ? RealClifford{} : it->second;
    ops = oracle::kron2(ops, clifford(c.h, c.x, c.z));
  }
  return ops * oracle::graph_state(g.graph);
}

Diagram random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CircuitOptions o;
  o.qubits = 1 + static_cast<int>(rng() % 5);
  o.depth = static_cast<int>(rng() % 16);
  o.projected = static_cast<int>(rng() % 3);
  o.zero_prep = 0.3;
  return random_circuit_state(o, rng());
}

TEST_CASE("GS-RLC form of random real states") {
  int zeros = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Diagram d = random_state(seed);
    DenseMatrix want = interpret(d);
    GsRlcDiagram g = to_gs_rlc(d);
    CHECK(g.labels() == qubit_labels(d.num_outputs()));
    if (g.zero) {
      ++zeros;
      CHECK(want.is_zero(1e-9));
      continue;
    }
    CHECK(proportional(gs_rlc_oracle(g), want));
    CHECK(proportional(gs_rlc_vector(g), want));
    CHECK(proportional(interpret(gs_rlc_diagram(g)), want));
    GsRlcDiagram r = reduce(g);
    CHECK(is_reduced(r));
    CHECK(r.reduced);
    CHECK(proportional(gs_rlc_oracle(r), want));
    for (const auto& [v, op] : r.ops) CHECK(op.local_op().has_value());
  }
  CHECK(zeros > 0);
}

TEST_CASE("angle-free encoding") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Diagram d = random_state(seed);
    Diagram e = encode_angle_free(d);
    CHECK(is_angle_free(e));
    CHECK(proportional(interpret(e), interpret(d)));
    CHECK(decode_angle_free(e) == d);
    CHECK(to_gs_rlc(e) == to_gs_rlc(d));
  }
}

TEST_CASE("non-real diagrams are rejected") {
  CHECK_THROWS_AS(to_gs_rlc(diagrams::spider(Kind::Z, 0, 2, Phase(1, 2))),
                  PreconditionError);
  CHECK_THROWS_AS(to_gs_rlc(diagrams::wire()), PreconditionError);
  CHECK_FALSE(is_real(diagrams::spider(Kind::X, 1, 1, Phase(1, 4))));
}

// A copy of d with a few sound rewrites applied.
Diagram rewritten(const Diagram& d, std::mt19937_64& rng) {
  Diagram cur = d;
  for (int step = 0; step < 4; ++step) {
    std::vector<MatchSite> sites;
    for (Rule r : {Rule::S1, Rule::S2, Rule::H2, Rule::PI, Rule::C, Rule::HPF,
                   Rule::BI})
      for (bool sw : {false, true})
        for (const MatchSite& m : find_matches(cur, RuleId{r, sw}))
          sites.push_back(m);
    if (sites.empty()) break;
    cur = apply_rule(cur, sites[rng() % sites.size()]).diagram;
  }
  return cur;
}

Diagram pauli_perturbed(const Diagram& d, std::mt19937_64& rng) {
  int n = d.num_outputs();
  Diagram layer;
  for (int i = 0; i < n; ++i) {
    Kind k = rng() % 2 ? Kind::Z : Kind::X;
    Diagram gate = i == static_cast<int>(rng() % n)
                       ? diagrams::spider(k, 1, 1, Phase::pi())
                       : diagrams::wire();
    layer = i == 0 ? gate : tensor(layer, gate);
  }
  return compose(d, layer);
}

TEST_CASE("decide agrees with dense comparison") {
  std::mt19937_64 rng(99);
  int equal = 0, unequal = 0;
  for (int i = 0; i < 400; ++i) {
    Diagram a = random_state(rng());
    Diagram b;
    switch (i % 4) {
      case 0: {
        CircuitOptions o;
        o.qubits = a.num_outputs();
        o.depth = 6;
        b = o.qubits == 0 ? a : random_circuit_state(o, rng());
        break;
      }
      case 1: b = rewritten(a, rng); break;
      case 2: b = a.num_outputs() ? pauli_perturbed(a, rng) : a; break;
      default: b = rewritten(pauli_perturbed(a, rng), rng); break;
    }
    DecideResult r = decide_equal(a, b);
    bool want = proportional(interpret(a), interpret(b));
    INFO("pair " << i << " " << r.reason);
    CHECK(r.equal == want);
    (r.equal ? equal : unequal)++;
    if (r.witness && !r.witness->first.zero && !r.witness->second.zero) {
      CHECK(is_reduced(r.witness->first));
      CHECK(is_reduced(r.witness->second));
      CHECK(is_simplified_pair(r.witness->first, r.witness->second));
    }
  }
  CHECK(equal > 50);
  CHECK(unequal > 50);
}

TEST_CASE("decide handles maps and arity mismatches") {
  Diagram hh = compose(diagrams::hadamard(), diagrams::hadamard());
  CHECK(decide_equal(hh, diagrams::wire()).equal);
  CHECK_FALSE(decide_equal(diagrams::hadamard(), diagrams::wire()).equal);
  CHECK_FALSE(decide_equal(diagrams::wire(), diagrams::identity(2)).equal);
  Diagram zx = compose(diagrams::spider(Kind::Z, 1, 1, Phase::pi()),
                       diagrams::spider(Kind::X, 1, 1, Phase::pi()));
  Diagram xz = compose(diagrams::spider(Kind::X, 1, 1, Phase::pi()),
                       diagrams::spider(Kind::Z, 1, 1, Phase::pi()));
  CHECK(decide_equal(zx, xz).equal);
}

TEST_CASE("simplified pairs have no crossed H operators") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    CircuitOptions o;
    o.qubits = 2 + static_cast<int>(rng() % 4);
    o.depth = 10;
    GsRlcDiagram a = reduce(to_gs_rlc(random_circuit_state(o, rng())));
    GsRlcDiagram b = reduce(to_gs_rlc(random_circuit_state(o, rng())));
    if (a.zero || b.zero) continue;
    auto [sa, sb] = simplify_pair(a, b);
    CHECK(is_simplified_pair(sa, sb));
    CHECK(proportional(gs_rlc_oracle(sa), gs_rlc_oracle(a)));
    CHECK(proportional(gs_rlc_oracle(sb), gs_rlc_oracle(b)));
    for (const auto& v : sa.labels()) {
      bool ha = sa.ops.count(v) && sa.ops.at(v).h;
      bool hb = sb.ops.count(v) && sb.ops.at(v).h;
      if (ha == hb) continue;
      for (const auto& w : sa.labels()) {
        if (w == v) continue;
        bool wa = sa.ops.count(w) && sa.ops.at(w).h;
        bool wb = sb.ops.count(w) && sb.ops.at(w).h;
        bool crossed = ha && !hb && wb && !wa;
        if (crossed)
          CHECK_FALSE((sa.graph.has_edge(v, w) || sb.graph.has_edge(v, w)));
      }
    }
  }
}

}  // namespace test_normalform
}  // namespace zxp
