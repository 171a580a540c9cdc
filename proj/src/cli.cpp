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

#include "zxpivot/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "zxpivot/derivations.hpp"
#include "zxpivot/errors.hpp"
#include "zxpivot/graphstate.hpp"
#include "zxpivot/json_io.hpp"
#include "zxpivot/normalform.hpp"
#include "zxpivot/rules.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {

namespace {

std::string fmt(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

void print_matrix(std::ostream& out, const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k)
      out << (k ? "  " : "") << fmt(m(i, k));
    out << "\n";
  }
}

Diagram load_diagram(const std::string& path) {
  return diagram_from_json(read_json_file(path));
}

SimpleGraph load_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

EqMode parse_mode(const std::string& s) {
  if (s == "exact") return EqMode::Exact;
  if (s == "phase") return EqMode::UpToPhase;
  if (s == "scalar") return EqMode::UpToScalar;
  throw MalformedInput("unknown mode '" + s + "'");
}

VertexId parse_vertex(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw MalformedInput("bad vertex id '" + s + "'");
}

struct Options {
  std::string file, file2, mode = "scalar", rule, theory = "eu", phase = "0",
                                u, v, vertex;
  std::vector<std::string> site, legs;
  double tol = kDefaultTol;
  bool zero = false, flat = false, as_json = false, swapped = false,
       backward = false, checked = false, list = false, trace = false,
       derive = false, vector = false, unchecked = false;
  int max_arity = 4, qubits = 3, depth = 8, projected = 0;
  double zero_prep = 0.25;
  std::uint64_t seed = 0;
};

MatchSite site_from_options(const Options& o) {
  MatchSite s;
  s.rule = RuleId{parse_rule(o.rule), o.swapped};
  s.direction = o.backward ? Direction::Backward : Direction::Forward;
  for (const std::string& kv : o.site) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("site binding must be key=id, got '" + kv + "'");
    s.binding[kv.substr(0, eq)] = parse_vertex(kv.substr(eq + 1));
  }
  for (const std::string& l : o.legs) s.legs.push_back(parse_vertex(l));
  s.phase = Phase::parse(o.phase);
  return s;
}

int cmd_interpret(const Options& o, std::ostream& out) {
  Diagram d = load_diagram(o.file);
  if (o.flat) d = flatten(d);
  DenseMatrix m = o.zero ? interpret_zero(d) : interpret(d);
  if (o.as_json)
    out << matrix_to_json(m).dump() << "\n";
  else
    print_matrix(out, m);
  return kExitOk;
}

int cmd_eq(const Options& o, std::ostream& out) {
  DenseMatrix a = interpret(load_diagram(o.file));
  DenseMatrix b = interpret(load_diagram(o.file2));
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    out << "not equal (different types)\n";
    return kExitOk;
  }
  EqResult r = eq_up_to(a, b, parse_mode(o.mode), o.tol);
  if (o.as_json) {
    json j{{"equal", r.equal}};
    if (r.scalar) j["scalar"] = {r.scalar->real(), r.scalar->imag()};
    out << j.dump() << "\n";
  } else {
    out << (r.equal ? "equal" : "not equal");
    if (r.equal && r.scalar) out << " (scalar " << fmt(*r.scalar) << ")";
    out << "\n";
  }
  return kExitOk;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
  Diagram d = load_diagram(o.file);
  Theory theory = parse_theory(o.theory);
  if (o.list) {
    RuleId id{parse_rule(o.rule), o.swapped};
    Direction dir = o.backward ? Direction::Backward : Direction::Forward;
    json sites = json::array();
    for (const MatchSite& s : find_matches(d, id, dir, theory))
      sites.push_back(site_to_json(s));
    out << sites.dump(2) << "\n";
    return kExitOk;
  }
  Derivation der(d, theory, o.checked);
  der.apply(site_from_options(o), "");
  if (o.trace)
    out << trace_to_json(der.trace()).dump(2) << "\n";
  else
    out << diagram_to_json(der.diagram()).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  json rows = json::array();
  auto mark = [](bool b) { return b ? "pass" : "fail"; };
  if (!o.as_json)
    out << std::left << std::setw(8) << "rule" << std::setw(10) << "standard"
        << std::setw(10) << "zero" << "flat\n";
  for (Rule r : all_rules()) {
    RuleReport rep = verify_rule(RuleId{r, false}, o.max_arity, o.tol);
    if (o.as_json) {
      rows.push_back({{"rule", rule_name(r)},
                      {"standard", rep.sound_standard()},
                      {"zero", rep.sound_zero()},
                      {"flat", rep.sound_flat()},
                      {"instances", rep.instances.size()}});
    } else {
      out << std::setw(8) << rule_name(r) << std::setw(10)
          << mark(rep.sound_standard()) << std::setw(10)
          << mark(rep.sound_zero()) << mark(rep.sound_flat()) << "\n";
    }
  }
  if (o.as_json) out << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_countermodel(const Options& o, std::ostream& out) {
  Diagram a = load_diagram(o.file), b = load_diagram(o.file2);
  auto same = [&](const DenseMatrix& x, const DenseMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    return eq_up_to(x, y, EqMode::UpToScalar, o.tol).equal;
  };
  json j{{"standard", same(interpret(a), interpret(b))},
         {"zero", same(interpret_zero(a), interpret_zero(b))},
         {"flat", same(interpret(flatten(a)), interpret(flatten(b)))}};
  if (o.as_json) {
    out << j.dump() << "\n";
  } else {
    for (const char* k : {"standard", "zero", "flat"})
      out << k << ": " << (j[k].get<bool>() ? "equal" : "different") << "\n";
  }
  return kExitOk;
}

int cmd_graphstate(const Options& o, std::ostream& out) {
  SimpleGraph g = load_graph(o.file);
  if (o.vector) {
    DenseMatrix v = graph_state_vector(g);
    if (o.as_json)
      out << matrix_to_json(v).dump() << "\n";
    else
      print_matrix(out, v);
    return kExitOk;
  }
  LabelledState s = graph_state_diagram(g);
  out << json{{"diagram", diagram_to_json(s.diagram)}, {"labels", s.labels}}
             .dump(2)
      << "\n";
  return kExitOk;
}

int cmd_lc(const Options& o, std::ostream& out) {
  SimpleGraph g = load_graph(o.file);
  if (!g.has_vertex(o.vertex))
    throw PreconditionError("no vertex " + o.vertex);
  out << graph_to_json(local_complement(g, o.vertex)).dump(2) << "\n";
  return kExitOk;
}

int cmd_pivot(const Options& o, std::ostream& out) {
  SimpleGraph g = load_graph(o.file);
  if (!g.has_vertex(o.u) || !g.has_vertex(o.v) || !g.has_edge(o.u, o.v))
    throw PreconditionError("pivot needs an edge " + o.u + "-" + o.v);
  if (!o.derive) {
    out << graph_to_json(pivot(g, o.u, o.v)).dump(2) << "\n";
    return kExitOk;
  }
  Trace t = derive_pivot(pivot_input(g, o.u, o.v), o.u, o.v,
                         parse_theory(o.theory), !o.unchecked);
  out << trace_to_json(t).dump(2) << "\n";
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  Diagram d = bend_inputs(load_diagram(o.file));
  out << gs_rlc_to_json(reduce(to_gs_rlc(d))).dump(2) << "\n";
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  DecideResult r = decide_equal(load_diagram(o.file), load_diagram(o.file2));
  if (o.as_json) {
    json j{{"equal", r.equal}, {"reason", r.reason}};
    if (r.witness)
      j["witness"] = {gs_rlc_to_json(r.witness->first),
                      gs_rlc_to_json(r.witness->second)};
    out << j.dump(2) << "\n";
  } else {
    out << (r.equal ? "equal" : "not equal") << " (" << r.reason << ")\n";
    if (r.witness)
      out << gs_rlc_to_json(r.witness->first).dump() << "\n"
          << gs_rlc_to_json(r.witness->second).dump() << "\n";
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  CircuitOptions c;
  c.qubits = o.qubits;
  c.depth = o.depth;
  c.projected = o.projected;
  c.zero_prep = o.zero_prep;
  out << diagram_to_json(random_circuit_state(c, o.seed)).dump(2) << "\n";
  return kExitOk;
}

int cmd_replay(const Options& o, std::ostream& out) {
  Trace t = trace_from_json(read_json_file(o.file));
  Trace r = replay(t, !o.unchecked);
  out << "replayed " << r.steps.size() << " steps"
      << (o.unchecked ? "" : ", every step oracle-checked") << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"ZX-calculus rewriting, graph states and normal forms"};
  app.require_subcommand(1);
  Options o;

  auto* interp = app.add_subcommand("interpret", "Matrix of a diagram");
  interp->add_option("diagram", o.file)->required();
  interp->add_flag("--zero", o.zero, "Interpret with every phase set to 0");
  interp->add_flag("--flat", o.flat, "Flatten the diagram first");
  interp->add_flag("--json", o.as_json);

  auto* eq = app.add_subcommand("eq", "Compare two diagrams");
  eq->add_option("a", o.file)->required();
  eq->add_option("b", o.file2)->required();
  eq->add_option("--mode", o.mode, "exact | phase | scalar");
  eq->add_option("--tol", o.tol);
  eq->add_flag("--json", o.as_json);

  auto* rw = app.add_subcommand("rewrite", "Apply one rule at a site");
  rw->add_option("diagram", o.file)->required();
  rw->add_option("--rule", o.rule)->required();
  rw->add_flag("--swapped", o.swapped, "Colour-swapped variant");
  rw->add_flag("--backward", o.backward, "Right-to-left direction");
  rw->add_option("--site", o.site, "Bindings key=id");
  rw->add_option("--legs", o.legs, "Leg ids for unfusing");
  rw->add_option("--phase", o.phase, "Phase parameter, num/den");
  rw->add_option("--theory", o.theory, "plain | hl | eu | angle-free");
  rw->add_flag("--checked", o.checked, "Compare both sides with the oracle");
  rw->add_flag("--list", o.list, "List matching sites instead");
  rw->add_flag("--trace", o.trace, "Print a one-step trace");

  auto* va = app.add_subcommand("verify-axioms", "Rule soundness table");
  va->add_option("--max-arity", o.max_arity);
  va->add_option("--tol", o.tol);
  va->add_flag("--json", o.as_json);

  auto* cm = app.add_subcommand("countermodel",
                                "Compare two diagrams in all three models");
  cm->add_option("a", o.file)->required();
  cm->add_option("b", o.file2)->required();
  cm->add_option("--tol", o.tol);
  cm->add_flag("--json", o.as_json);

  auto* gs = app.add_subcommand("graphstate", "Graph-state diagram of a graph");
  gs->add_option("graph", o.file)->required();
  gs->add_flag("--vector", o.vector, "Print the state vector instead");
  gs->add_flag("--json", o.as_json);

  auto* lc = app.add_subcommand("lc", "Local complementation");
  lc->add_option("graph", o.file)->required();
  lc->add_option("--vertex", o.vertex)->required();

  auto* pv = app.add_subcommand("pivot", "Pivot along an edge");
  pv->add_option("graph", o.file)->required();
  pv->add_option("--u", o.u)->required();
  pv->add_option("--v", o.v)->required();
  pv->add_flag("--derive", o.derive, "Print the rewrite trace");
  pv->add_option("--theory", o.theory);
  pv->add_flag("--unchecked", o.unchecked);

  auto* nf = app.add_subcommand("normalize", "Reduced GS-RLC form");
  nf->add_option("diagram", o.file)->required();

  auto* de = app.add_subcommand("decide", "Decide equality via normal forms");
  de->add_option("a", o.file)->required();
  de->add_option("b", o.file2)->required();
  de->add_flag("--json", o.as_json);

  auto* gen = app.add_subcommand("gen", "Random real stabilizer state");
  gen->add_option("--qubits", o.qubits);
  gen->add_option("--depth", o.depth);
  gen->add_option("--projected", o.projected);
  gen->add_option("--zero-prep", o.zero_prep);
  gen->add_option("--seed", o.seed);

  auto* rp = app.add_subcommand("replay-trace", "Re-apply a stored trace");
  rp->add_option("trace", o.file)->required();
  rp->add_flag("--unchecked", o.unchecked);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (interp->parsed()) return cmd_interpret(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (rw->parsed()) return cmd_rewrite(o, out);
    if (va->parsed()) return cmd_verify(o, out);
    if (cm->parsed()) return cmd_countermodel(o, out);
    if (gs->parsed()) return cmd_graphstate(o, out);
    if (lc->parsed()) return cmd_lc(o, out);
    if (pv->parsed()) return cmd_pivot(o, out);
    if (nf->parsed()) return cmd_normalize(o, out);
    if (de->parsed()) return cmd_decide(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (rp->parsed()) return cmd_replay(o, out);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitMalformed;
}

}  // namespace zxp
