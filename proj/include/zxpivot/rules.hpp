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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxpivot/dense.hpp"
#include "zxpivot/diagram.hpp"

namespace zxp {

/**
 * Rewrite rules. S1..H2 are the basic axioms; EU and HL the two optional
 * axioms; C1, C2 and L the angle-free replacements for PI and C. TP (the
 * triangle pivot) and SCALAR (drop a closed nonzero component) are
 * auxiliary rules used by the scripted derivations.
 */
enum class Rule {
  S1, S2, S3, PI, C, H1, HPF, BI, H2, EU, HL, C1, C2, L, TP, SCALAR
};

std::string rule_name(Rule r);
/** Throws MalformedInput on an unknown name. */
Rule parse_rule(const std::string& name);
std::vector<Rule> basic_rules();
std::vector<Rule> all_rules();

struct RuleId {
  Rule rule = Rule::S1;
  /** Colours exchanged. */
  bool swapped = false;
  bool operator==(const RuleId&) const = default;
};

std::string rule_str(const RuleId& id);

enum class Direction { Forward, Backward };

enum class Theory { PlainZX, ZXPlusHL, ZXPlusEU, AngleFree };

std::string theory_name(Theory t);
Theory parse_theory(const std::string& name);
bool in_theory(Rule r, Theory t);
/** Throws TheoryError when r is not available in t. */
void require_in_theory(Rule r, Theory t);

/**
 * A located rule instance. Binding keys are rule specific (see rules.cpp).
 * legs and phase only matter for rules that take parameters, such as
 * unfusing a spider.
 */
struct MatchSite {
  RuleId rule;
  Direction direction = Direction::Forward;
  std::map<std::string, VertexId> binding;
  std::vector<VertexId> legs;
  Phase phase;

  VertexId at(const std::string& key) const;
  bool operator==(const MatchSite&) const = default;
};

std::vector<MatchSite> find_matches(const Diagram& d, RuleId rule,
                                    Direction dir = Direction::Forward,
                                    Theory theory = Theory::ZXPlusEU);

/** True when site still describes an instance of its rule in d. */
bool site_valid(const Diagram& d, const MatchSite& site);

struct RewriteOptions {
  Theory theory = Theory::ZXPlusEU;
  bool checked = false;
  double tol = kDefaultTol;
};

struct RewriteResult {
  Diagram diagram;
  /** s with [[before]] = s * [[after]]; only set in checked mode. */
  std::optional<cplx> scalar;
};

/**
 * Applies site to d. Throws TheoryError if the rule is not in the theory,
 * StaleSite if the site does not match, OracleMismatch if checked mode
 * finds the semantics changed.
 */
RewriteResult apply_rule(const Diagram& d, const MatchSite& site,
                         const RewriteOptions& opts = {});

/**
 * Replaces a complete bipartite block of phase-0 spiders, X spiders in
 * x_set against Z spiders in z_set with single edges, by one X-Z pair.
 * Block spiders left with degree 2 are spliced out.
 */
Diagram generalized_bialgebra(const Diagram& d,
                              const std::vector<VertexId>& x_set,
                              const std::vector<VertexId>& z_set);

struct InstanceCheck {
  std::string label;
  bool standard = false;
  bool zero = false;
  bool flat = false;
  std::optional<cplx> scalar;
};

struct RuleReport {
  RuleId rule;
  std::vector<InstanceCheck> instances;
  bool sound_standard() const;
  bool sound_zero() const;
  bool sound_flat() const;
};

/**
 * Builds sample instances of the rule (spider arities up to max_arity,
 * phases multiples of pi/2), applies the rule and compares both sides
 * under interpret, interpret_zero and flatten followed by interpret.
 */
RuleReport verify_rule(RuleId rule, int max_arity = 4,
                       double tol = kDefaultTol);

}  // namespace zxp
