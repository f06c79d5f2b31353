#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "flagfold/graph.hpp"
#include "flagfold/homology.hpp"
#include "flagfold/moves.hpp"

namespace flagfold {

// JSON encodings shared by the trace files and the CLI reports.
//
// graph:   {"vertices": [..], "edges": [[u,v], ..], "labels": {"id": name}?}
// profile: {"reduced": bool, "betti": [..], "torsion": [[d, factor], ..]}
// verdict: {"kind": "yes"|"no"|"unknown", "certificate"?, "witness"?, "diagnostics"?}
// trace:   {"start": graph, "moves": [{"op": "I1".."I4"|"S-", "args": [..], "cert": verdict}], "end": graph}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const ITrace& t);
ITrace trace_from_json(const nlohmann::json& j);

}  // namespace flagfold
