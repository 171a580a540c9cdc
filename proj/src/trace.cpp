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

#include "zxpivot/trace.hpp"

#include <algorithm>
#include <set>

#include "zxpivot/errors.hpp"
#include "zxpivot/semantics.hpp"

namespace zxp {

cplx Trace::total_scalar() const {
  cplx s = 1.0;
  for (const TraceStep& t : steps)
    if (t.scalar) s *= *t.scalar;
  return s;
}

std::vector<std::string> Trace::stages() const {
  std::vector<std::string> out;
  for (const TraceStep& t : steps)
    if (std::find(out.begin(), out.end(), t.stage) == out.end())
      out.push_back(t.stage);
  return out;
}

Derivation::Derivation(Diagram start, Theory theory, bool checked)
    : current_(std::move(start)), theory_(theory), checked_(checked) {
  current_.reset_id_counter();
  trace_.start = current_;
  trace_.result = current_;
  trace_.theory = theory;
}

std::vector<VertexId> Derivation::apply(const MatchSite& site,
                                        const std::string& stage) {
  RewriteOptions opts;
  opts.theory = theory_;
  std::vector<VertexId> before = current_.vertex_ids();
  RewriteResult r = apply_rule(current_, site, opts);
  if (checked_) {
    // The previous result doubles as this step's left-hand side.
    if (!semantics_) semantics_ = interpret(current_);
    DenseMatrix after = interpret(r.diagram);
    EqResult eq = eq_up_to(*semantics_, after, EqMode::UpToScalar);
    if (!eq.equal)
      throw OracleMismatch("rule " + rule_str(site.rule) +
                           " changed the semantics");
    r.scalar = eq.scalar;
    semantics_ = std::move(after);
  }
  current_ = std::move(r.diagram);
  trace_.steps.push_back({site, stage, r.scalar});
  trace_.result = current_;
  std::vector<VertexId> created;
  std::set<VertexId> old(before.begin(), before.end());
  for (VertexId v : current_.vertex_ids())
    if (!old.count(v)) created.push_back(v);
  return created;
}

std::vector<VertexId> Derivation::forward(
    Rule rule, std::map<std::string, VertexId> binding,
    const std::string& stage, bool swapped) {
  MatchSite s;
  s.rule = RuleId{rule, swapped};
  s.direction = Direction::Forward;
  s.binding = std::move(binding);
  return apply(s, stage);
}

std::vector<VertexId> Derivation::backward(
    Rule rule, std::map<std::string, VertexId> binding,
    const std::string& stage, std::vector<VertexId> legs, Phase phase,
    bool swapped) {
  MatchSite s;
  s.rule = RuleId{rule, swapped};
  s.direction = Direction::Backward;
  s.binding = std::move(binding);
  s.legs = std::move(legs);
  s.phase = phase;
  return apply(s, stage);
}

Trace replay(const Trace& t, bool checked) {
  Derivation d(t.start, t.theory, checked);
  for (const TraceStep& step : t.steps) d.apply(step.site, step.stage);
  if (!(d.diagram() == t.result))
    throw PreconditionError("replayed trace ends at a different diagram");
  return d.trace();
}

}  // namespace zxp
