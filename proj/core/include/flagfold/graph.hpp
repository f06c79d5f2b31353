#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace flagfold {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Thrown on structural misuse (unknown vertex, missing edge, parse errors).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite simple graph with integer vertex ids and optional external labels.
///
/// Ids are small integers but need not be contiguous: deleting a vertex
/// keeps the remaining ids. Values are immutable once built; every edit
/// returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on ids 0..n-1.
    static Graph on_vertices(int n);
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    /// Graph on an explicit (possibly sparse) id set.
    static Graph from_vertex_set(const VertexSet& vertices,
                                 const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    /// Cycle on ids 0..rim-1 plus an apex (id = rim) adjacent to the whole rim.
    static Graph wheel(int rim);
    /// K_{2,2,2}: K6 minus the perfect matching {0,3},{1,4},{2,5}.
    static Graph octahedron();

    bool empty() const { return adj_.empty(); }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;
    bool has_vertex(Vertex v) const { return adj_.count(v) != 0; }
    bool has_edge(Vertex v, Vertex w) const;
    Vertex max_vertex_id() const;

    VertexSet vertices() const;

    /// Open neighborhood N(v). Throws GraphError on an unknown vertex.
    const VertexSet& neighbors(Vertex v) const;
    /// Closed neighborhood N[v] = N(v) u {v}.
    VertexSet closed_neighborhood(Vertex v) const;
    /// N(v,w) = N(v) n N(w); adjacency of v,w is not required, v != w is.
    VertexSet common_neighborhood(Vertex v, Vertex w) const;

    /// Induced subgraph on S with ids re-mapped densely to 0..|S|-1 in
    /// sorted order. Labels record the original identity of each vertex.
    Graph induced(const VertexSet& s) const;

    Graph delete_vertex(Vertex v) const;
    /// Adds a vertex with id max_vertex_id()+1 (0 on an empty graph),
    /// adjacent exactly to `neighborhood`.
    Graph add_vertex(const VertexSet& neighborhood) const;
    Graph delete_edge(Vertex v, Vertex w) const;
    Graph add_edge(Vertex v, Vertex w) const;

    std::optional<std::string> label(Vertex v) const;
    void set_label(Vertex v, std::string name);
    /// Label if present, otherwise the decimal id.
    std::string display_name(Vertex v) const;

    /// Edges as (u, w) with u < w, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Labeled structural equality (labels excluded).
    bool operator==(const Graph& other) const { return adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void require_vertex(Vertex v) const;

    std::map<Vertex, VertexSet> adj_;
    std::map<Vertex, std::string> labels_;
};

struct DeleteVertex {
    Vertex v;
};
struct AddVertex {
    VertexSet neighborhood;
};
struct DeleteEdge {
    Vertex v;
    Vertex w;
};
struct AddEdge {
    Vertex v;
    Vertex w;
};

/// Carrier for the elementary graph edits G - v, G \ e, and their inverses.
using GraphEdit = std::variant<DeleteVertex, AddVertex, DeleteEdge, AddEdge>;

/// Applies one edit, validating its precondition against G. Pure.
Graph apply_edit(const Graph& g, const GraphEdit& edit);

/// Memoization digest: iterated degree/neighborhood color refinement
/// (vertex_count rounds) hashed as a sorted multiset together with the
/// vertex and edge counts. Invariant under relabeling; not a full
/// canonical form, so unequal digests prove non-isomorphism of the
/// refinements only.
std::uint64_t canonical_hash(const Graph& g);

/// Erdos-Renyi G(n,p) from a fully specified stream: std::mt19937_64
/// seeded with `seed`, one 53-bit draw per vertex pair (i,j), i < j, in
/// lexicographic order; the edge is present iff draw/2^53 < p.
/// Identical (n, p, seed) triples give identical graphs on any platform.
Graph random_graph(int n, double p, std::uint64_t seed);

// Text format: line 1 "n m", then m lines "u v" with 0 <= u < v < n;
// '#' starts a comment; isolated vertices are implied by n.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);

/// Writes the dense re-mapping of g (ids compressed to 0..n-1 in sorted
/// order), edges sorted lexicographically.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

}  // namespace flagfold
