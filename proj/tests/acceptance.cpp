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

// Acceptance suite. Each criterion prints one line and contributes to the
// exit status; run a single one with --criterion N.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "zxpivot/derivations.hpp"
#include "zxpivot/errors.hpp"
#include "zxpivot/normalform.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp::acceptance {
namespace {

struct Outcome {
  bool pass = true;
  std::string failure;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) failure = what;
    pass = pass && ok;
  }
};

std::vector<Rule> fig1_rules() { return basic_rules(); }

Outcome axiom_soundness() {
  Outcome o;
  int instances = 0;
  for (Rule r : fig1_rules())
    for (bool sw : {false, true}) {
      RuleReport rep = verify_rule(RuleId{r, sw}, 4, 1e-9);
      instances += static_cast<int>(rep.instances.size());
      o.expect(!rep.instances.empty(), rule_str(rep.rule) + " has no instances");
      o.expect(rep.sound_standard(), rule_str(rep.rule) + " unsound");
    }
  o.note << instances << " instances";
  return o;
}

Outcome separation_table() {
  Outcome o;
  for (Rule r : fig1_rules())
    for (bool sw : {false, true}) {
      RuleReport rep = verify_rule(RuleId{r, sw}, 3);
      o.expect(rep.sound_standard() && rep.sound_zero() && rep.sound_flat(),
               rule_str(rep.rule) + " fails a model");
    }
  RuleReport eu = verify_rule(RuleId{Rule::EU, false}, 3);
  o.expect(eu.sound_standard() && !eu.sound_zero() && !eu.sound_flat(),
           "EU row");
  RuleReport hl = verify_rule(RuleId{Rule::HL, false}, 3);
  o.expect(hl.sound_standard() && !hl.sound_zero() && hl.sound_flat(),
           "HL row");

  DenseMatrix loop = interpret_zero(h_loop_diagram());
  DenseMatrix rot = interpret_zero(pi_rotation_diagram());
  o.expect(eq_up_to(rot, oracle::ident(), EqMode::Exact, 1e-12).equal,
           "[[pi-rot]]_0 = I");
  DenseMatrix half = oracle::mat(2, 2, {0.5, 0, 0, -0.5});
  bool literal = eq_up_to(loop, half, EqMode::Exact, 1e-12).equal;
  o.note << "[[H-loop]]_0 = diag(" << loop(0, 0).real() << ", "
         << loop(1, 1).real() << ")";
  o.expect(literal, "[[H-loop]]_0 = (1/2)diag(1,-1)");
  return o;
}

// Calls f(g) on every connected graph with up to n vertices, in parallel.
template <typename F>
long for_connected(int lo, int hi, F f) {
  long failures = 0;
  for (int n = lo; n <= hi; ++n) {
    std::vector<SimpleGraph> gs = all_graphs(n, true);
    const long count = static_cast<long>(gs.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures)
    for (long i = 0; i < count; ++i) failures += f(gs[i]) ? 0 : 1;
  }
  return failures;
}

bool graph_state_props(const SimpleGraph& g) {
  bool ok = true;
  for (const auto& v : g.vertices())
    ok = ok && check_stabilizer(g, v, 1e-9) && check_vdn(g, v, 1e-9);
  for (const auto& [u, v] : g.edges())
    ok = ok && check_pivot_property(g, u, v, 1e-9);
  return ok;
}

Outcome graph_state_properties() {
  Outcome o;
  long bad = for_connected(1, 6, graph_state_props);
  o.expect(bad == 0, std::to_string(bad) + " graphs up to 6 vertices");
  std::mt19937_64 rng(7);
  std::vector<SimpleGraph> gs;
  for (int i = 0; i < 100; ++i)
    gs.push_back(random_connected_graph(7, 0.4, rng));
  long bad7 = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad7)
  for (int i = 0; i < 100; ++i) bad7 += graph_state_props(gs[i]) ? 0 : 1;
  o.expect(bad7 == 0, std::to_string(bad7) + " random 7-vertex graphs");
  o.note << "connected graphs <= 6 and 100 random 7-vertex graphs";
  return o;
}

Outcome graph_identities() {
  Outcome o;
  long bad = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<SimpleGraph> gs = all_graphs(n, false);
    const long count = static_cast<long>(gs.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad)
    for (long i = 0; i < count; ++i) {
      const SimpleGraph& g = gs[i];
      bool ok = true;
      for (const auto& v : g.vertices())
        ok = ok && local_complement(local_complement(g, v), v) == g;
      for (const auto& [u, v] : g.edges()) {
        SimpleGraph p = pivot(g, u, v);
        ok = ok && p == local_complement(local_complement(local_complement(g, u), v), u);
        ok = ok && p == local_complement(local_complement(local_complement(g, v), u), v);
        ok = ok && p == oracle::lc(oracle::lc(oracle::lc(g, u), v), u);
        ok = ok && pivot(p, u, v) == g;
      }
      bad += ok ? 0 : 1;
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " graphs violate an identity");
  std::mt19937_64 rng(11);
  int bipartite_bad = 0;
  for (int i = 0; i < 100; ++i) {
    SimpleGraph g = random_bipartite_graph(1 + static_cast<int>(rng() % 4),
                                           1 + static_cast<int>(rng() % 4),
                                           0.5, rng);
    for (const auto& [u, v] : g.edges())
      if (!is_bipartite(pivot(g, u, v))) ++bipartite_bad;
  }
  o.expect(bipartite_bad == 0, "bipartiteness lost");
  o.note << "all graphs <= 6 vertices, 100 bipartite graphs";
  return o;
}

Outcome pivot_derivations() {
  Outcome o;
  long runs = 0, no_common = 0;
  for (int n = 2; n <= 5; ++n) {
    std::vector<SimpleGraph> gs = all_graphs(n, true);
    const long count = static_cast<long>(gs.size());
    long bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad, runs, no_common)
    for (long i = 0; i < count; ++i) {
      const SimpleGraph& g = gs[i];
      for (const auto& [u, v] : g.edges()) {
        LabelledState in = pivot_input(g, u, v);
        SimpleGraph want = pivot(g, u, v);
        bool common = false;
        for (const auto& w : g.neighbours(u)) common |= g.has_edge(v, w);
        try {
          Trace t = derive_pivot(in, u, v, Theory::ZXPlusHL, true);
          auto got = recognize_graph_state(t.result, g.vertices());
          bool ok = got && *got == want &&
                    oracle::proportional(
                        interpret(t.result),
                        interpret(graph_state_diagram(want).diagram));
          if (!common) {
            Trace p = derive_pivot_no_common(in, u, v, true);
            for (const TraceStep& s : p.steps)
              ok = ok && in_theory(s.site.rule.rule, Theory::PlainZX);
            auto gp = recognize_graph_state(p.result, g.vertices());
            ok = ok && p.theory == Theory::PlainZX && gp && *gp == want;
            ++no_common;
          } else {
            try {
              derive_pivot(in, u, v, Theory::PlainZX, false);
              ok = false;
            } catch (const TheoryError&) {
            }
          }
          bad += ok ? 0 : 1;
        } catch (const ZxError&) {
          ++bad;
        }
        ++runs;
      }
    }
    o.expect(bad == 0, std::to_string(bad) + " failures at n=" +
                           std::to_string(n));
  }
  o.note << runs << " checked derivations, " << no_common
         << " also under plain";
  return o;
}

Outcome chains() {
  Outcome o;
  Trace tp = derive_hl_from_triangle_pivot(true);
  Trace eu = derive_hl_from_eu(Theory::ZXPlusEU, true);
  for (const Trace* t : {&tp, &eu}) {
    Trace r = replay(*t, true);
    o.expect(r.result == t->result, "replay result");
    o.expect(compact_ids(t->start) == compact_ids(h_loop_diagram()), "start");
    o.expect(compact_ids(t->result) == pi_rotation_diagram(), "end");
    for (const TraceStep& s : r.steps) {
      o.expect(s.scalar.has_value(), "step scalar");
      o.expect(in_theory(s.site.rule.rule, t->theory), "theory");
    }
  }
  for (const TraceStep& s : tp.steps)
    o.expect(s.site.rule.rule != Rule::HL && s.site.rule.rule != Rule::EU,
             "triangle chain avoids HL and EU");
  o.note << tp.steps.size() << " + " << eu.steps.size() << " steps";
  return o;
}

Diagram random_state(std::mt19937_64& rng) {
  CircuitOptions c;
  c.qubits = 1 + static_cast<int>(rng() % 5);
  c.depth = static_cast<int>(rng() % 16);
  c.projected = static_cast<int>(rng() % 3);
  c.zero_prep = 0.3;
  return random_circuit_state(c, rng());
}

Diagram rewritten(const Diagram& d, std::mt19937_64& rng) {
  Diagram cur = d;
  for (int step = 0; step < 5; ++step) {
    std::vector<MatchSite> sites;
    for (Rule r : {Rule::S1, Rule::S2, Rule::H2, Rule::PI, Rule::C,
                   Rule::HPF, Rule::BI, Rule::H1})
      for (bool sw : {false, true})
        for (const MatchSite& m : find_matches(cur, RuleId{r, sw}))
          sites.push_back(m);
    if (sites.empty()) break;
    cur = apply_rule(cur, sites[rng() % sites.size()]).diagram;
  }
  return cur;
}

Diagram pauli_perturbed(const Diagram& d, std::mt19937_64& rng) {
  const int n = d.num_outputs();
  const int target = static_cast<int>(rng() % n);
  Diagram layer = diagrams::empty();
  for (int i = 0; i < n; ++i)
    layer = tensor(layer, i == target
                              ? diagrams::spider(rng() % 2 ? Kind::Z : Kind::X,
                                                 1, 1, Phase::pi())
                              : diagrams::wire());
  return compose(d, layer);
}

Outcome completeness() {
  Outcome o;
  std::mt19937_64 rng(2026);
  int pairs = 0, disagreements = 0, equal = 0, predicates = 0;
  for (int i = 0; i < 600; ++i) {
    Diagram a = random_state(rng);
    Diagram b;
    const int n = a.num_outputs();
    switch (i % 5) {
      case 0: {
        CircuitOptions c;
        c.qubits = n;
        c.depth = static_cast<int>(rng() % 12);
        b = random_circuit_state(c, rng());
        break;
      }
      case 1: b = rewritten(a, rng); break;
      case 2: b = pauli_perturbed(a, rng); break;
      case 3: b = rewritten(pauli_perturbed(a, rng), rng); break;
      default: {
        SimpleGraph g = random_connected_graph(std::max(n, 2), 0.5, rng);
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        a = pivot_input(g, u, v).diagram;
        b = graph_state_diagram(rng() % 2 ? pivot(g, u, v) : g).diagram;
        break;
      }
    }
    DecideResult r = decide_equal(a, b);
    bool want = oracle::proportional(interpret(a), interpret(b));
    ++pairs;
    if (r.equal != want) ++disagreements;
    equal += want;
    if (r.witness && !r.witness->first.zero && !r.witness->second.zero) {
      ++predicates;
      o.expect(is_reduced(r.witness->first) && is_reduced(r.witness->second),
               "reduced predicate");
      o.expect(is_simplified_pair(r.witness->first, r.witness->second),
               "simplified-pair predicate");
    }
  }
  o.expect(disagreements == 0,
           std::to_string(disagreements) + " disagreements");
  o.note << pairs << " pairs, " << equal << " equal, " << disagreements
         << " disagreements, " << predicates << " normal-form pairs checked";
  return o;
}

// Matrix of the gates w applies to qubit q alone.
DenseMatrix factor(const LocalOpWord& w, const std::string& q) {
  LocalOpWord one;
  auto it = w.ops.find(q);
  if (it != w.ops.end()) one.ops[q] = it->second;
  return word_matrix(one, {q});
}

Outcome vdn_squares() {
  Outcome o;
  long bad = 0, dense_checks = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<SimpleGraph> gs = all_graphs(n, false);
    const long count = static_cast<long>(gs.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad, dense_checks)
    for (long i = 0; i < count; ++i) {
      const SimpleGraph& g = gs[i];
      for (const auto& v : g.vertices()) {
        LocalOpWord m = vdn_word(g, v), k = stabilizer_word(g, v);
        bool ok = true;
        // Tensor products of unitaries agree up to phase iff every factor does.
        for (const auto& q : g.vertices()) {
          DenseMatrix mq = factor(m, q);
          ok = ok && eq_up_to(mq * mq, factor(k, q), EqMode::UpToPhase).equal;
        }
        if (n <= 4) {
          DenseMatrix full = word_matrix(m, g.vertices());
          ok = ok && eq_up_to(full * full, word_matrix(k, g.vertices()),
                              EqMode::UpToPhase)
                         .equal;
          ++dense_checks;
        }
        bad += ok ? 0 : 1;
      }
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " vertices");
  o.note << "all graphs <= 6 vertices, " << dense_checks
         << " also checked densely";
  return o;
}

Outcome reachability() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Diagram d = random_single_colour_diagram(seed);
    Trace t = reduce_single_colour(d, true);
    o.expect(is_single_spider(t.result), "single spider");
    o.expect(oracle::proportional(interpret(t.result), interpret(d)),
             "single-colour oracle");
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Diagram d = random_h_free_diagram(seed);
    Trace t = reduce_to_bipartite(d, true);
    o.expect(is_simple_bipartite(t.result), "simple bipartite");
    o.expect(oracle::proportional(interpret(t.result), interpret(d)),
             "bipartite oracle");
  }
  o.note << "100 single-colour and 100 H-free diagrams, every step checked";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"axiom soundness", axiom_soundness},
      {"separation table", separation_table},
      {"stabilizer, local complementation and pivot states",
       graph_state_properties},
      {"graph identities", graph_identities},
      {"pivot derivations", pivot_derivations},
      {"H-loop chains", chains},
      {"completeness", completeness},
      {"M_v squared", vdn_squares},
      {"reachability", reachability},
  };
  return all;
}

}  // namespace
}  // namespace zxp::acceptance

int main(int argc, char** argv) {
  using namespace zxp::acceptance;
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-9)")
      ->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria()[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::cout << "criterion " << i + 1 << " [PRIMARY] " << criteria()[i].name
              << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.note.str();
    if (!o.pass) std::cout << "; first failure: " << o.failure;
    std::cout << ", " << std::fixed << std::setprecision(1) << secs << " s)"
              << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
