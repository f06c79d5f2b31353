#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "flagfold/graph.hpp"
#include "oracles.hpp"

using namespace flagfold;

TEST_CASE("open neighborhood") {
    Graph p3 = Graph::path(3);
    CHECK(p3.neighbors(1) == VertexSet{0, 2});
    CHECK(Graph::complete(4).neighbors(0) == VertexSet{1, 2, 3});
    Graph iso = Graph::from_edges(3, {{0, 1}});
    CHECK(iso.neighbors(2).empty());
    CHECK_THROWS_AS(p3.neighbors(7), GraphError);
}

TEST_CASE("closed neighborhood adds the vertex itself") {
    Graph p3 = Graph::path(3);
    CHECK(p3.closed_neighborhood(1) == VertexSet{0, 1, 2});
    CHECK(p3.closed_neighborhood(0) == VertexSet{0, 1});
}

TEST_CASE("common neighborhood") {
    Graph c4 = Graph::cycle(4);
    CHECK(c4.common_neighborhood(0, 2) == VertexSet{1, 3});
    CHECK(Graph::complete(4).common_neighborhood(0, 1) == VertexSet{2, 3});
    CHECK(Graph::path(3).common_neighborhood(0, 2) == VertexSet{1});
    CHECK_THROWS_AS(c4.common_neighborhood(0, 0), GraphError);
    CHECK_THROWS_AS(c4.common_neighborhood(0, 9), GraphError);
}

TEST_CASE("common neighborhood agrees with the set intersection, n <= 6") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(6, 0.5, seed);
        for (Vertex v : g.vertices())
            for (Vertex w : g.vertices()) {
                if (v >= w) continue;
                VertexSet expect;
                std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(),
                                      g.neighbors(w).begin(), g.neighbors(w).end(),
                                      std::inserter(expect, expect.end()));
                CHECK(g.common_neighborhood(v, w) == expect);
            }
    }
}

TEST_CASE("induced subgraphs") {
    Graph c5 = Graph::cycle(5);
    Graph sub = c5.induced({0, 1, 2});
    CHECK(sub == Graph::path(3));
    CHECK(c5.induced({}).empty());
    CHECK(Graph::complete(4).induced({0, 1, 2}) == Graph::complete(3));
    CHECK_THROWS_AS(c5.induced({0, 9}), GraphError);
    // dense re-mapping keeps original identity in the labels
    Graph shifted = c5.induced({2, 3, 4});
    CHECK(shifted.vertices() == VertexSet{0, 1, 2});
    CHECK(shifted.display_name(0) == "2");
    // induced on the full vertex set is the identity (ids already dense)
    CHECK(c5.induced(c5.vertices()) == c5);
}

TEST_CASE("apply_edit") {
    CHECK(apply_edit(Graph::cycle(4), DeleteVertex{0}) ==
          Graph::cycle(4).delete_vertex(0));
    Graph p = apply_edit(Graph::cycle(4), DeleteVertex{0});
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(p.has_edge(1, 2));
    CHECK(p.has_edge(2, 3));

    Graph k3v = apply_edit(Graph::complete(3), AddVertex{{0, 1}});
    CHECK(k3v.vertex_count() == 4);
    CHECK(k3v.edge_count() == 5);
    CHECK(k3v.neighbors(3) == VertexSet{0, 1});

    Graph cut = apply_edit(Graph::complete(3), DeleteEdge{0, 1});
    CHECK(cut.edge_count() == 2);
    CHECK_FALSE(cut.has_edge(0, 1));

    CHECK_THROWS_AS(apply_edit(Graph::path(3), DeleteEdge{0, 2}), GraphError);
    CHECK_THROWS_AS(apply_edit(Graph::path(3), AddEdge{0, 1}), GraphError);
    CHECK_THROWS_AS(apply_edit(Graph::path(3), AddVertex{{0, 9}}), GraphError);
    CHECK_THROWS_AS(apply_edit(Graph::path(3), DeleteVertex{9}), GraphError);
}

TEST_CASE("edit roundtrips") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(6, 0.5, seed + 100);
        auto edges = g.edges();
        if (!edges.empty()) {
            auto [u, w] = edges.front();
            Graph back = apply_edit(apply_edit(g, DeleteEdge{u, w}), AddEdge{u, w});
            CHECK(back == g);
        }
        Graph grown = apply_edit(g, AddVertex{{0, 1}});
        Graph back = apply_edit(grown, DeleteVertex{grown.max_vertex_id()});
        CHECK(back == g);
    }
}

TEST_CASE("neighborhood symmetry on a random corpus") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, 0.4, seed);
        for (Vertex v : g.vertices())
            for (Vertex w : g.neighbors(v)) CHECK(g.neighbors(w).count(v) == 1);
    }
}

TEST_CASE("canonical_hash") {
    CHECK(canonical_hash(Graph::cycle(5)) == canonical_hash(Graph::cycle(5)));
    CHECK(canonical_hash(Graph::cycle(5)) != canonical_hash(Graph::path(5)));
    // relabeled C5: 0-2-4-1-3-0
    Graph relabeled = Graph::from_edges(5, {{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}});
    CHECK(oracle::isomorphic(relabeled, Graph::cycle(5)));
    CHECK(canonical_hash(relabeled) == canonical_hash(Graph::cycle(5)));
}

TEST_CASE("canonical_hash is relabel-invariant on all graphs with 5 vertices") {
    for (const Graph& g : oracle::all_graphs_up_to_iso(5)) {
        std::uint64_t h = canonical_hash(g);
        // a couple of fixed relabelings
        std::vector<std::vector<Vertex>> perms = {{4, 3, 2, 1, 0}, {1, 2, 3, 4, 0}};
        for (const auto& perm : perms) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (auto [u, w] : g.edges())
                edges.emplace_back(perm[static_cast<std::size_t>(u)],
                                   perm[static_cast<std::size_t>(w)]);
            CHECK(canonical_hash(Graph::from_edges(5, edges)) == h);
        }
    }
}

TEST_CASE("random_graph endpoints and determinism") {
    Graph empty5 = random_graph(5, 0.0, 1);
    CHECK(empty5.vertex_count() == 5);
    CHECK(empty5.edge_count() == 0);
    CHECK(random_graph(5, 1.0, 1) == Graph::complete(5));
    CHECK(random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42));
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), GraphError);
    CHECK_THROWS_AS(random_graph(5, -0.1, 1), GraphError);
}

TEST_CASE("graph text format roundtrip") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 3}, {2, 4}});
    CHECK(parse_graph_text(graph_to_text(g)) == g);

    Graph parsed = parse_graph_text("# comment\n3 2\n0 1\n1 2\n");
    CHECK(parsed == Graph::path(3));

    CHECK_THROWS_AS(parse_graph_text("junk"), GraphError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 0\n"), GraphError);  // u < v required
    CHECK_THROWS_AS(parse_graph_text("2 1\n0 5\n"), GraphError);  // out of range
}

TEST_CASE("writer emits dense ids sorted") {
    Graph g = Graph::cycle(4).delete_vertex(0);  // ids 1,2,3
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "3 2\n0 1\n1 2\n");
}

TEST_CASE("builders") {
    CHECK(Graph::wheel(5).vertex_count() == 6);
    CHECK(Graph::wheel(5).edge_count() == 10);
    CHECK(Graph::wheel(5).neighbors(5) == VertexSet{0, 1, 2, 3, 4});
    Graph oct = Graph::octahedron();
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.edge_count() == 12);
    CHECK_FALSE(oct.has_edge(0, 3));
    CHECK_FALSE(oct.has_edge(1, 4));
    CHECK_FALSE(oct.has_edge(2, 5));
}
