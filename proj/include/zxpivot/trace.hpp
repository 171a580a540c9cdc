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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zxpivot/rules.hpp"

namespace zxp {

struct TraceStep {
  MatchSite site;
  /** Free-form label grouping steps of a scripted derivation. */
  std::string stage;
  std::optional<cplx> scalar;
};

struct Trace {
  Diagram start;
  Diagram result;
  Theory theory = Theory::ZXPlusEU;
  std::vector<TraceStep> steps;

  /** Product of the recorded per-step scalars. */
  cplx total_scalar() const;
  /** Stage labels in first-seen order. */
  std::vector<std::string> stages() const;
};

/**
 * Records a sequence of rewrites from a start diagram. In checked mode
 * every step is compared with the oracle and the scalar is recorded.
 */
class Derivation {
 public:
  Derivation(Diagram start, Theory theory, bool checked = true);

  const Diagram& diagram() const { return current_; }
  Theory theory() const { return theory_; }

  /** Applies site and returns the ids of vertices it created. */
  std::vector<VertexId> apply(const MatchSite& site, const std::string& stage);
  /** Shorthand for a forward site with the given binding. */
  std::vector<VertexId> forward(Rule rule,
                                std::map<std::string, VertexId> binding,
                                const std::string& stage, bool swapped = false);
  std::vector<VertexId> backward(Rule rule,
                                 std::map<std::string, VertexId> binding,
                                 const std::string& stage,
                                 std::vector<VertexId> legs = {},
                                 Phase phase = {}, bool swapped = false);

  const Trace& trace() const { return trace_; }

 private:
  Diagram current_;
  Theory theory_;
  bool checked_;
  Trace trace_;
  std::optional<DenseMatrix> semantics_;
};

/**
 * Re-applies every step of the trace to its start diagram. Throws StaleSite
 * when a step no longer matches and OracleMismatch in checked mode; the
 * result must equal the recorded one or PreconditionError is raised.
 */
Trace replay(const Trace& t, bool checked = true);

}  // namespace zxp
