#pragma once

#include <optional>
#include <string>

#include "flagfold/graph.hpp"
#include "flagfold/moves.hpp"
#include "flagfold/reduction.hpp"

namespace flagfold {

/// Certifies the precondition subgraph of a move against G: the link
/// N(v) for I1/SDel, the glue set S for I2, the common neighborhood
/// N(v,w) for I3/I4. Structural mismatches (unknown vertex, missing or
/// preexisting edge) throw GraphError; an empty precondition subgraph is
/// a No verdict, not an error.
Verdict check_precondition(const Graph& g, const IMove& m, const Budget& budget = {});

struct MoveOutcome {
    Verdict precondition;
    /// Present iff the precondition verdict is Yes.
    std::optional<Graph> result;

    bool applied() const { return result.has_value(); }
};

/// Applies a move after certifying its precondition. A No precondition is
/// a rejection with witness, Unknown an inconclusive rejection.
MoveOutcome apply_move(const Graph& g, const IMove& m, const Budget& budget = {});

struct VerifyResult {
    bool ok = false;
    /// Index of the first failing move, or -1 (end mismatch reports the
    /// move count).
    int failed_step = -1;
    std::string diagnostics;
};

/// Replays a trace, re-certifying every precondition from scratch; stored
/// certificates are never trusted.
VerifyResult verify_trace(const ITrace& t, const Budget& budget = {});

/// Full certifier with the move trace exposed: Yes certificates always
/// carry an ITrace ending at K1.
Verdict reduce_via_moves(const Graph& g, const Budget& budget = {});

}  // namespace flagfold
