#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagfold/graph.hpp"
#include "flagfold/homology.hpp"

namespace flagfold {

/// Limits for the contractibility certifier: search nodes expanded and
/// recursion depth of nested link certifications.
struct Budget {
    std::uint64_t max_nodes = 100000;
    int max_depth = 8;

    Budget shrunk() const { return Budget{max_nodes, max_depth - 1}; }
};

struct Verdict;

/// One certified transformation step. Ops I1-I4 are the four contractible
/// transformations; SDel records an s-dismantlable vertex deletion (a
/// special case of I1).
struct IMove {
    enum class Op { I1, I2, I3, I4, SDel };

    Op op;
    Vertex v = -1;         // I1, I3, I4, SDel
    Vertex w = -1;         // I3, I4
    VertexSet glue_set;    // I2
    /// Verdict for the precondition subgraph; informational only, every
    /// verification path re-certifies.
    std::shared_ptr<const Verdict> cert;

    static IMove delete_vertex(Vertex v) { return IMove{Op::I1, v, -1, {}, nullptr}; }
    static IMove glue_vertex(VertexSet s) { return IMove{Op::I2, -1, -1, std::move(s), nullptr}; }
    static IMove delete_edge(Vertex v, Vertex w) { return IMove{Op::I3, v, w, {}, nullptr}; }
    static IMove glue_edge(Vertex v, Vertex w) { return IMove{Op::I4, v, w, {}, nullptr}; }
    static IMove s_delete(Vertex v) { return IMove{Op::SDel, v, -1, {}, nullptr}; }

    std::string op_name() const;
};

/// A replayable move sequence from `start` to `end`.
struct ITrace {
    Graph start;
    std::vector<IMove> moves;
    Graph end;
};

/// Outcome of a contractibility query. Yes carries a move trace to K1, No
/// carries a nonzero reduced homology profile, Unknown carries diagnostics.
struct Verdict {
    enum class Kind { Yes, No, Unknown };

    Kind kind;
    std::optional<ITrace> certificate;       // Yes
    std::optional<HomologyProfile> witness;  // No (absent only for the empty graph)
    std::string diagnostics;

    bool yes() const { return kind == Kind::Yes; }
    bool no() const { return kind == Kind::No; }
    bool unknown() const { return kind == Kind::Unknown; }

    static Verdict make_yes(ITrace trace) {
        return Verdict{Kind::Yes, std::move(trace), std::nullopt, {}};
    }
    static Verdict make_no(HomologyProfile profile) {
        return Verdict{Kind::No, std::nullopt, std::move(profile), {}};
    }
    static Verdict make_no_empty() {
        return Verdict{Kind::No, std::nullopt, std::nullopt,
                       "the empty graph is not contractible"};
    }
    static Verdict make_unknown(std::string why) {
        return Verdict{Kind::Unknown, std::nullopt, std::nullopt, std::move(why)};
    }
};

}  // namespace flagfold
