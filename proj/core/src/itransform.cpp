#include "flagfold/itransform.hpp"

#include <sstream>

namespace flagfold {

std::string IMove::op_name() const {
    switch (op) {
        case Op::I1: return "I1";
        case Op::I2: return "I2";
        case Op::I3: return "I3";
        case Op::I4: return "I4";
        case Op::SDel: return "S-";
    }
    return "?";
}

namespace {

VertexSet precondition_set(const Graph& g, const IMove& m) {
    switch (m.op) {
        case IMove::Op::I1:
        case IMove::Op::SDel:
            return g.neighbors(m.v);
        case IMove::Op::I2:
            for (Vertex v : m.glue_set)
                if (!g.has_vertex(v))
                    throw GraphError("glue set references unknown vertex " + std::to_string(v));
            return m.glue_set;
        case IMove::Op::I3:
            if (!g.has_edge(m.v, m.w))
                throw GraphError("no edge {" + std::to_string(m.v) + "," + std::to_string(m.w) +
                                 "} to delete");
            return g.common_neighborhood(m.v, m.w);
        case IMove::Op::I4:
            if (g.has_edge(m.v, m.w))
                throw GraphError("edge {" + std::to_string(m.v) + "," + std::to_string(m.w) +
                                 "} already present");
            return g.common_neighborhood(m.v, m.w);
    }
    throw GraphError("unknown move kind");
}

}  // namespace

Verdict check_precondition(const Graph& g, const IMove& m, const Budget& budget) {
    VertexSet s = precondition_set(g, m);
    if (s.empty()) return Verdict::make_no_empty();
    return certify_contractible(g.induced(s), budget);
}

MoveOutcome apply_move(const Graph& g, const IMove& m, const Budget& budget) {
    Verdict pre = check_precondition(g, m, budget);
    if (!pre.yes()) return MoveOutcome{std::move(pre), std::nullopt};

    Graph out = [&] {
        switch (m.op) {
            case IMove::Op::I1:
            case IMove::Op::SDel:
                return g.delete_vertex(m.v);
            case IMove::Op::I2:
                return g.add_vertex(m.glue_set);
            case IMove::Op::I3:
                return g.delete_edge(m.v, m.w);
            case IMove::Op::I4:
                return g.add_edge(m.v, m.w);
        }
        throw GraphError("unknown move kind");
    }();
    return MoveOutcome{std::move(pre), std::move(out)};
}

VerifyResult verify_trace(const ITrace& t, const Budget& budget) {
    Graph current = t.start;
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        MoveOutcome step;
        try {
            step = apply_move(current, t.moves[i], budget);
        } catch (const GraphError& e) {
            std::ostringstream why;
            why << "move " << i << " (" << t.moves[i].op_name() << "): structural error: "
                << e.what();
            return VerifyResult{false, static_cast<int>(i), why.str()};
        }
        if (!step.applied()) {
            std::ostringstream why;
            why << "move " << i << " (" << t.moves[i].op_name() << "): precondition "
                << (step.precondition.no() ? "refuted" : "inconclusive");
            if (step.precondition.witness)
                why << " (" << step.precondition.witness->to_string() << ")";
            return VerifyResult{false, static_cast<int>(i), why.str()};
        }
        current = std::move(*step.result);
    }
    if (current != t.end)
        return VerifyResult{false, static_cast<int>(t.moves.size()),
                            "replayed end graph does not match the recorded end"};
    return VerifyResult{true, -1, ""};
}

Verdict reduce_via_moves(const Graph& g, const Budget& budget) {
    return certify_contractible(g, budget);
}

}  // namespace flagfold
