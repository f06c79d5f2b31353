#include "flagfold/graph.hpp"

#include <algorithm>
#include <random>
#include <fstream>
#include <sstream>

namespace flagfold {

Graph Graph::on_vertices(int n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    Graph g;
    for (int v = 0; v < n; ++v) g.adj_[v];
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g = on_vertices(n);
    for (auto [u, v] : edges) g = g.add_edge(u, v);
    return g;
}

Graph Graph::from_vertex_set(const VertexSet& vertices,
                             const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g;
    for (Vertex v : vertices) g.adj_[v];
    for (auto [u, v] : edges) g = g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g = on_vertices(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            g.adj_[u].insert(v);
            g.adj_[v].insert(u);
        }
    return g;
}

Graph Graph::path(int n) {
    Graph g = on_vertices(n);
    for (int v = 0; v + 1 < n; ++v) {
        g.adj_[v].insert(v + 1);
        g.adj_[v + 1].insert(v);
    }
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.adj_[0].insert(n - 1);
    g.adj_[n - 1].insert(0);
    return g;
}

Graph Graph::wheel(int rim) {
    Graph g = cycle(rim);
    VertexSet all;
    for (int v = 0; v < rim; ++v) all.insert(v);
    return g.add_vertex(all);
}

Graph Graph::octahedron() {
    Graph g = complete(6);
    g = g.delete_edge(0, 3);
    g = g.delete_edge(1, 4);
    g = g.delete_edge(2, 5);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t deg = 0;
    for (const auto& [v, nbrs] : adj_) deg += nbrs.size();
    return deg / 2;
}

bool Graph::has_edge(Vertex v, Vertex w) const {
    auto it = adj_.find(v);
    return it != adj_.end() && it->second.count(w) != 0;
}

Vertex Graph::max_vertex_id() const {
    if (adj_.empty()) throw GraphError("max_vertex_id on empty graph");
    return adj_.rbegin()->first;
}

VertexSet Graph::vertices() const {
    VertexSet vs;
    for (const auto& [v, nbrs] : adj_) vs.insert(v);
    return vs;
}

void Graph::require_vertex(Vertex v) const {
    if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

const VertexSet& Graph::neighbors(Vertex v) const {
    require_vertex(v);
    return adj_.at(v);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

VertexSet Graph::common_neighborhood(Vertex v, Vertex w) const {
    if (v == w) throw GraphError("common neighborhood needs distinct vertices");
    const VertexSet& nv = neighbors(v);
    const VertexSet& nw = neighbors(w);
    VertexSet out;
    std::set_intersection(nv.begin(), nv.end(), nw.begin(), nw.end(),
                          std::inserter(out, out.end()));
    return out;
}

Graph Graph::induced(const VertexSet& s) const {
    std::map<Vertex, Vertex> remap;
    Vertex next = 0;
    for (Vertex v : s) {
        require_vertex(v);
        remap[v] = next++;
    }
    Graph out;
    for (Vertex v : s) {
        Vertex nv = remap[v];
        out.adj_[nv];
        out.labels_[nv] = display_name(v);
        for (Vertex w : adj_.at(v))
            if (remap.count(w)) out.adj_[nv].insert(remap[w]);
    }
    return out;
}

Graph Graph::delete_vertex(Vertex v) const {
    require_vertex(v);
    Graph out = *this;
    for (Vertex w : out.adj_[v]) out.adj_[w].erase(v);
    out.adj_.erase(v);
    out.labels_.erase(v);
    return out;
}

Graph Graph::add_vertex(const VertexSet& neighborhood) const {
    for (Vertex w : neighborhood) require_vertex(w);
    Graph out = *this;
    Vertex v = adj_.empty() ? 0 : max_vertex_id() + 1;
    out.adj_[v] = neighborhood;
    for (Vertex w : neighborhood) out.adj_[w].insert(v);
    return out;
}

Graph Graph::delete_edge(Vertex v, Vertex w) const {
    if (!has_edge(v, w))
        throw GraphError("no edge {" + std::to_string(v) + "," + std::to_string(w) + "}");
    Graph out = *this;
    out.adj_[v].erase(w);
    out.adj_[w].erase(v);
    return out;
}

Graph Graph::add_edge(Vertex v, Vertex w) const {
    require_vertex(v);
    require_vertex(w);
    if (v == w) throw GraphError("self-loops are not allowed");
    if (has_edge(v, w))
        throw GraphError("edge {" + std::to_string(v) + "," + std::to_string(w) + "} already present");
    Graph out = *this;
    out.adj_[v].insert(w);
    out.adj_[w].insert(v);
    return out;
}

std::optional<std::string> Graph::label(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

void Graph::set_label(Vertex v, std::string name) {
    require_vertex(v);
    labels_[v] = std::move(name);
}

std::string Graph::display_name(Vertex v) const {
    auto it = labels_.find(v);
    return it != labels_.end() ? it->second : std::to_string(v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [v, nbrs] : adj_)
        for (Vertex w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

Graph apply_edit(const Graph& g, const GraphEdit& edit) {
    return std::visit(
        [&](const auto& e) -> Graph {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, DeleteVertex>) return g.delete_vertex(e.v);
            else if constexpr (std::is_same_v<T, AddVertex>) return g.add_vertex(e.neighborhood);
            else if constexpr (std::is_same_v<T, DeleteEdge>) return g.delete_edge(e.v, e.w);
            else return g.add_edge(e.v, e.w);
        },
        edit);
}

namespace {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t a, std::uint64_t b) { return mix(a ^ mix(b)); }

}  // namespace

std::uint64_t canonical_hash(const Graph& g) {
    VertexSet vs = g.vertices();
    std::map<Vertex, std::uint64_t> color;
    for (Vertex v : vs) color[v] = mix(g.neighbors(v).size());
    for (std::size_t round = 0; round < g.vertex_count(); ++round) {
        std::map<Vertex, std::uint64_t> next;
        for (Vertex v : vs) {
            std::vector<std::uint64_t> nbr;
            for (Vertex w : g.neighbors(v)) nbr.push_back(color[w]);
            std::sort(nbr.begin(), nbr.end());
            std::uint64_t h = color[v];
            for (std::uint64_t c : nbr) h = combine(h, c);
            next[v] = h;
        }
        color = std::move(next);
    }
    std::vector<std::uint64_t> final_colors;
    for (Vertex v : vs) final_colors.push_back(color[v]);
    std::sort(final_colors.begin(), final_colors.end());
    std::uint64_t digest = combine(g.vertex_count(), g.edge_count());
    for (std::uint64_t c : final_colors) digest = combine(digest, c);
    return digest;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0,1]");
    Graph g = Graph::on_vertices(n);
    std::mt19937_64 gen(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (u < p) g = g.add_edge(i, j);
        }
    return g;
}

Graph parse_graph(std::istream& in) {
    auto next_tokens = [&](int line_no) -> std::pair<bool, std::vector<long long>> {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::vector<long long> toks;
            long long x;
            bool bad = false;
            while (ls >> x) toks.push_back(x);
            std::string junk;
            if (ls.clear(), ls >> junk) bad = true;
            if (bad) throw GraphError("line " + std::to_string(line_no) + ": expected integers");
            if (!toks.empty()) return {true, toks};
        }
        return {false, {}};
    };

    int line_no = 1;
    auto [ok, header] = next_tokens(line_no);
    if (!ok || header.size() != 2)
        throw GraphError("line 1: expected header 'n m'");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw GraphError("line 1: negative counts");
    Graph g = Graph::on_vertices(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        ++line_no;
        auto [got, toks] = next_tokens(line_no);
        if (!got || toks.size() != 2)
            throw GraphError("line " + std::to_string(line_no) + ": expected edge 'u v'");
        long long u = toks[0], v = toks[1];
        if (!(0 <= u && u < v && v < n))
            throw GraphError("line " + std::to_string(line_no) + ": edge (" + std::to_string(u) +
                             "," + std::to_string(v) + ") violates 0 <= u < v < n");
        g = g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    std::map<Vertex, Vertex> remap;
    Vertex next = 0;
    for (Vertex v : g.vertices()) remap[v] = next++;
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto [u, v] : g.edges()) {
        Vertex a = remap[u], b = remap[v];
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace flagfold
