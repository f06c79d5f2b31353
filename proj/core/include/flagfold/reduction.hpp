#pragma once

#include <utility>
#include <vector>

#include "flagfold/graph.hpp"
#include "flagfold/moves.hpp"

namespace flagfold {

/// All ordered pairs (v, w) with N[v] <= N[w] and v != w, sorted.
/// Inclusion is non-strict, so true twins dominate each other.
std::vector<std::pair<Vertex, Vertex>> dominated_vertices(const Graph& g);

struct DismantlingTrace {
    /// (removed vertex, dominating vertex), in removal order.
    std::vector<std::pair<Vertex, Vertex>> steps;
    /// What remains when no dominated vertex exists.
    Graph core;

    bool reached_k1() const { return core.vertex_count() == 1; }
};

/// Greedy dismantling, always removing the lowest-id dominated vertex.
/// Greedy order is complete for dismantlability, so the input is
/// dismantlable iff the core is K1. Throws GraphError on the empty graph.
DismantlingTrace dismantle(const Graph& g);
bool is_dismantlable(const Graph& g);

/// Def: v is s-dismantlable when G[N(v)] is dismantlable. False for
/// isolated vertices (the empty graph is not dismantlable).
bool is_s_dismantlable(const Graph& g, Vertex v);

struct STrace {
    std::vector<Vertex> deletions;  // in deletion order
    Graph terminal;

    bool reached_k1() const { return terminal.vertex_count() == 1; }
};

/// Repeatedly deletes the lowest-id s-dismantlable vertex.
STrace s_reduce(const Graph& g);

/// Layered contractibility certifier:
///   1. greedy dismantling,
///   2. s-reduction,
///   3. homology refutation of the clique complex,
///   4. budgeted best-first search over certified moves (deletions always;
///      expansions restricted to closed-neighborhood twins and edge
///      gluings whose common neighborhood passes layers 1-2).
/// Yes and No are both sound; Unknown reports exhausted budget.
/// Memoization is per call, keyed by canonical_hash with structural
/// equality verified on hit.
Verdict certify_contractible(const Graph& g, const Budget& budget = {});

/// Converts a dismantling trace into certified I1 moves (the dominating
/// vertex cones the deleted vertex's link).
ITrace dismantling_to_moves(const Graph& g, const DismantlingTrace& trace);

}  // namespace flagfold
