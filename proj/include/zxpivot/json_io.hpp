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

#include <string>

#include <json.hpp>

#include "zxpivot/dense.hpp"
#include "zxpivot/diagram.hpp"
#include "zxpivot/graph.hpp"
#include "zxpivot/normalform.hpp"
#include "zxpivot/trace.hpp"

namespace zxp {

using json = nlohmann::json;

/** Every parser throws MalformedInput on structurally bad input. */
json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

json gs_rlc_to_json(const GsRlcDiagram& g);
GsRlcDiagram gs_rlc_from_json(const json& j);

/** Rows of [re, im] pairs. */
json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const json& j);

json site_to_json(const MatchSite& s);
MatchSite site_from_json(const json& j);

/** {"theory", "start", "result", "steps": [...]}. */
json trace_to_json(const Trace& t);
Trace trace_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace zxp
