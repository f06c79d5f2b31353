#include "flagfold/link_moves.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "flagfold/homology.hpp"
#include "flagfold/reduction.hpp"

namespace flagfold {

Verdict certify_complex_contractible(const SimplicialComplex& k, const Budget& budget) {
    if (k.empty()) return Verdict::make_no_empty();
    if (k.vertex_count() == 1) {
        ITrace trivial;
        trivial.start = Graph::on_vertices(1);
        trivial.end = trivial.start;
        return Verdict::make_yes(std::move(trivial));
    }

    CollapseTrace collapse = greedy_collapse(k);
    if (collapse.result.facets().size() == 1 && collapse.result.facets()[0].size() == 1) {
        ITrace trace;  // the collapse itself is the certificate; record endpoints
        trace.start = one_skeleton(k);
        trace.end = Graph::on_vertices(1);
        Verdict v = Verdict::make_yes(std::move(trace));
        v.diagnostics = "greedy collapse reaches a point";
        return v;
    }

    try {
        HomologyProfile profile = homology(k, /*reduced=*/true);
        if (!profile.trivial()) return Verdict::make_no(std::move(profile));
    } catch (const FaceCapExceeded&) {
        // keep going; only the refutation path is lost
    }

    // A flag complex is its skeleton's clique complex, so the graph
    // certifier answers directly; otherwise one subdivision makes it flag.
    try {
        if (is_flag(k).flag) return certify_contractible(one_skeleton(k), budget);
        return certify_contractible(one_skeleton(barycentric(k)), budget);
    } catch (const FaceCapExceeded&) {
        return Verdict::make_unknown("face cap exceeded during flagification");
    }
}

ComplexMoveOutcome link_vertex_move(const SimplicialComplex& k, const ComplexMove& m,
                                    const Budget& budget) {
    if (m.kind == ComplexMove::Kind::LinkDeleteVertex) {
        if (!k.has_vertex(m.vertex))
            throw ComplexError("unknown vertex token '" + m.vertex + "'");
        Verdict v = certify_complex_contractible(link(k, m.vertex), budget);
        if (!v.yes()) return ComplexMoveOutcome{std::move(v), std::nullopt};
        return ComplexMoveOutcome{std::move(v), k.delete_vertex(m.vertex)};
    }

    // LinkAddVertex: the provided link must be a subcomplex and contractible.
    SimplicialComplex provided = SimplicialComplex::from_facets(m.link_facets);
    for (const auto& f : m.link_facets)
        if (!k.has_face(f))
            throw ComplexError("link facet is not a face of the complex");
    Verdict v = certify_complex_contractible(provided, budget);
    if (!v.yes()) return ComplexMoveOutcome{std::move(v), std::nullopt};
    return ComplexMoveOutcome{std::move(v), k.cone_over(m.vertex, m.link_facets)};
}

LinkDeletionSequence find_link_deletion_sequence(const SimplicialComplex& k,
                                                 const SimplicialComplex& target,
                                                 const Budget& budget) {
    std::set<std::string> target_tokens(target.tokens().begin(), target.tokens().end());
    for (const auto& t : target_tokens)
        if (!k.has_vertex(t))
            throw ComplexError("target vertex '" + t + "' is not in the complex");
    if (k.induced(target_tokens) != target)
        throw ComplexError("target is not the induced subcomplex on its vertex set");

    std::uint64_t nodes = 0;
    std::set<std::set<std::string>> dead;  // vertex sets that cannot reach the target

    std::vector<std::string> order;
    std::function<bool(const SimplicialComplex&)> dfs = [&](const SimplicialComplex& current) {
        std::set<std::string> state(current.tokens().begin(), current.tokens().end());
        if (state == target_tokens) return current == target;
        if (dead.count(state)) return false;
        if (nodes >= budget.max_nodes) return false;
        ++nodes;

        for (const auto& v : current.tokens()) {
            if (target_tokens.count(v)) continue;
            Verdict link_ok = certify_complex_contractible(link(current, v), budget);
            if (!link_ok.yes()) continue;
            order.push_back(v);
            if (dfs(current.delete_vertex(v))) return true;
            order.pop_back();
        }
        dead.insert(std::move(state));
        return false;
    };

    LinkDeletionSequence out;
    if (dfs(k)) {
        out.found = true;
        out.deletions = order;
    } else {
        std::ostringstream why;
        why << (nodes >= budget.max_nodes ? "node budget exhausted" : "no certified order found")
            << " after " << nodes << " states";
        out.diagnostics = why.str();
    }
    return out;
}

}  // namespace flagfold
