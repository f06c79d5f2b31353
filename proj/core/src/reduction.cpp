#include "flagfold/reduction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "flagfold/complex.hpp"
#include "flagfold/homology.hpp"

namespace flagfold {

namespace {

bool dominates(const Graph& g, Vertex v, Vertex w) {
    VertexSet nv = g.closed_neighborhood(v);
    VertexSet nw = g.closed_neighborhood(w);
    return std::includes(nw.begin(), nw.end(), nv.begin(), nv.end());
}

std::shared_ptr<const Verdict> summary_yes(std::string why) {
    return std::make_shared<Verdict>(
        Verdict{Verdict::Kind::Yes, std::nullopt, std::nullopt, std::move(why)});
}

}  // namespace

std::vector<std::pair<Vertex, Vertex>> dominated_vertices(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v : g.vertices())
        for (Vertex w : g.vertices())
            if (v != w && dominates(g, v, w)) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

DismantlingTrace dismantle(const Graph& g) {
    if (g.empty()) throw GraphError("dismantle of the empty graph");
    DismantlingTrace trace;
    trace.core = g;
    for (;;) {
        auto pairs = dominated_vertices(trace.core);
        if (pairs.empty()) break;
        auto [v, w] = pairs.front();  // lowest removed vertex first
        trace.steps.emplace_back(v, w);
        trace.core = trace.core.delete_vertex(v);
    }
    return trace;
}

bool is_dismantlable(const Graph& g) { return dismantle(g).reached_k1(); }

bool is_s_dismantlable(const Graph& g, Vertex v) {
    const VertexSet& nbrs = g.neighbors(v);
    if (nbrs.empty()) return false;
    return is_dismantlable(g.induced(nbrs));
}

STrace s_reduce(const Graph& g) {
    if (g.empty()) throw GraphError("s_reduce of the empty graph");
    STrace trace;
    trace.terminal = g;
    for (;;) {
        Vertex pick = -1;
        for (Vertex v : trace.terminal.vertices())
            if (is_s_dismantlable(trace.terminal, v)) {
                pick = v;
                break;
            }
        if (pick == -1) break;
        trace.deletions.push_back(pick);
        trace.terminal = trace.terminal.delete_vertex(pick);
    }
    return trace;
}

ITrace dismantling_to_moves(const Graph& g, const DismantlingTrace& trace) {
    ITrace out;
    out.start = g;
    for (auto [v, w] : trace.steps) {
        IMove m = IMove::delete_vertex(v);
        m.cert = summary_yes("link is coned by dominating vertex " + std::to_string(w));
        out.moves.push_back(std::move(m));
    }
    out.end = trace.core;
    return out;
}

namespace {

/// Per-call certifier state: one node budget and one memo table shared by
/// the top-level query and all nested link certifications.
class Certifier {
public:
    explicit Certifier(Budget budget) : budget_(budget) {}

    Verdict certify(const Graph& g, int depth) {
        if (g.empty()) return Verdict::make_no_empty();
        if (const Verdict* hit = lookup(g)) return *hit;
        Verdict v = certify_uncached(g, depth);
        if (!v.unknown()) store(g, v);
        return v;
    }

    std::uint64_t nodes_used() const { return nodes_used_; }

private:
    const Verdict* lookup(const Graph& g) {
        auto it = memo_.find(canonical_hash(g));
        if (it == memo_.end()) return nullptr;
        for (const auto& [graph, verdict] : it->second)
            if (graph == g) return &verdict;
        return nullptr;
    }

    void store(const Graph& g, const Verdict& v) {
        memo_[canonical_hash(g)].emplace_back(g, v);
    }

    Verdict certify_uncached(const Graph& g, int depth) {
        // Layer 1: greedy dismantling.
        DismantlingTrace dt = dismantle(g);
        if (dt.reached_k1()) return Verdict::make_yes(dismantling_to_moves(g, dt));

        // Layer 2: s-reduction.
        STrace st = s_reduce(g);
        if (st.reached_k1()) {
            ITrace trace;
            trace.start = g;
            for (Vertex v : st.deletions) {
                IMove m = IMove::s_delete(v);
                m.cert = summary_yes("open neighborhood is dismantlable");
                trace.moves.push_back(std::move(m));
            }
            trace.end = st.terminal;
            return Verdict::make_yes(std::move(trace));
        }

        // Layer 3: homology refutation of the clique complex.
        bool homology_known = false;
        try {
            HomologyProfile profile = homology(clique_complex(g), /*reduced=*/true);
            homology_known = true;
            if (!profile.trivial()) return Verdict::make_no(std::move(profile));
        } catch (const FaceCapExceeded&) {
            // fall through to the search with no refutation available
        }

        // Layer 4: budgeted best-first search over certified moves.
        if (depth >= budget_.max_depth)
            return Verdict::make_unknown("recursion depth budget exhausted");
        Verdict out = search(g, depth);
        if (out.unknown() && !homology_known)
            out.diagnostics += "; homology skipped (face cap)";
        return out;
    }

    struct Node {
        Graph graph;
        long parent;
        IMove via;
    };

    Verdict search(const Graph& start, int depth) {
        std::vector<Node> nodes;
        using Key = std::tuple<std::size_t, std::size_t, std::size_t>;  // (n, m, seq)
        std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
        std::map<std::uint64_t, std::vector<Graph>> seen;

        auto visit = [&](const Graph& g) {
            auto& bucket = seen[canonical_hash(g)];
            for (const Graph& other : bucket)
                if (other == g) return false;
            bucket.push_back(g);
            return true;
        };

        nodes.push_back(Node{start, -1, IMove::delete_vertex(-1)});
        visit(start);
        open.emplace(start.vertex_count(), start.edge_count(), 0);

        while (!open.empty()) {
            if (nodes_used_ >= budget_.max_nodes) {
                std::ostringstream why;
                why << "node budget exhausted (" << nodes_used_ << " nodes)";
                return Verdict::make_unknown(why.str());
            }
            ++nodes_used_;
            auto [n, m, index] = open.top();
            open.pop();
            const Graph current = nodes[index].graph;

            if (current.vertex_count() == 1)
                return Verdict::make_yes(reconstruct(nodes, static_cast<long>(index), start));

            auto push_child = [&](Graph child, IMove via) {
                if (!visit(child)) return;
                auto cn = child.vertex_count();
                auto cm = child.edge_count();
                nodes.push_back(Node{std::move(child), static_cast<long>(index), std::move(via)});
                open.emplace(cn, cm, nodes.size() - 1);
            };

            // Deletions first: I1 on every vertex with a certified link.
            for (Vertex v : current.vertices()) {
                const VertexSet& nv = current.neighbors(v);
                if (nv.empty()) continue;
                Verdict pre = certify(current.induced(nv), depth + 1);
                if (!pre.yes()) continue;
                IMove m = IMove::delete_vertex(v);
                m.cert = summary_yes("link certified contractible");
                push_child(current.delete_vertex(v), std::move(m));
            }

            // I3 on every edge with a certified common neighborhood.
            for (auto [v, w] : current.edges()) {
                VertexSet common = current.common_neighborhood(v, w);
                if (common.empty()) continue;
                Verdict pre = certify(current.induced(common), depth + 1);
                if (!pre.yes()) continue;
                IMove m = IMove::delete_edge(v, w);
                m.cert = summary_yes("common neighborhood certified contractible");
                push_child(current.delete_edge(v, w), std::move(m));
            }

            // Restricted expansions. I2: duplicate a closed neighborhood
            // (the glued subgraph is a cone over the duplicated vertex).
            for (Vertex u : current.vertices()) {
                VertexSet s = current.closed_neighborhood(u);
                IMove m = IMove::glue_vertex(s);
                m.cert = summary_yes("closed neighborhood is a cone");
                push_child(current.add_vertex(s), std::move(m));
            }

            // I4 only where layers 1-2 already certify the common
            // neighborhood, keeping edge expansion cheap and terminating.
            VertexSet vset = current.vertices();
            std::vector<Vertex> vs(vset.begin(), vset.end());
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    Vertex v = vs[a], w = vs[b];
                    if (current.has_edge(v, w)) continue;
                    VertexSet common = current.common_neighborhood(v, w);
                    if (common.empty()) continue;
                    Graph sub = current.induced(common);
                    if (!dismantle(sub).reached_k1() && !s_reduce(sub).reached_k1()) continue;
                    IMove m = IMove::glue_edge(v, w);
                    m.cert = summary_yes("common neighborhood reduces greedily");
                    push_child(current.add_edge(v, w), std::move(m));
                }
        }
        return Verdict::make_unknown("search space exhausted under expansion restrictions");
    }

    static ITrace reconstruct(const std::vector<Node>& nodes, long index, const Graph& start) {
        ITrace trace;
        trace.start = start;
        trace.end = nodes[static_cast<std::size_t>(index)].graph;
        std::vector<IMove> rev;
        for (long i = index; nodes[static_cast<std::size_t>(i)].parent >= 0;
             i = nodes[static_cast<std::size_t>(i)].parent)
            rev.push_back(nodes[static_cast<std::size_t>(i)].via);
        trace.moves.assign(rev.rbegin(), rev.rend());
        return trace;
    }

    Budget budget_;
    std::uint64_t nodes_used_ = 0;
    std::map<std::uint64_t, std::vector<std::pair<Graph, Verdict>>> memo_;
};

}  // namespace

Verdict certify_contractible(const Graph& g, const Budget& budget) {
    if (g.empty()) throw GraphError("certify_contractible of the empty graph");
    Certifier certifier(budget);
    return certifier.certify(g, 0);
}

}  // namespace flagfold
