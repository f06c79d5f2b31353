#include <algorithm>

#include "doctest.h"
#include "flagfold/homology.hpp"
#include "flagfold/itransform.hpp"
#include "flagfold/reduction.hpp"
#include "oracles.hpp"

using namespace flagfold;

TEST_CASE("dominated_vertices on small fixtures") {
    auto p3 = dominated_vertices(Graph::path(3));
    CHECK(std::count(p3.begin(), p3.end(), std::pair<Vertex, Vertex>{0, 1}) == 1);
    CHECK(std::count(p3.begin(), p3.end(), std::pair<Vertex, Vertex>{2, 1}) == 1);
    CHECK(dominated_vertices(Graph::cycle(4)) == oracle::brute_force_dominated(Graph::cycle(4)));
    CHECK(dominated_vertices(Graph::cycle(4)).empty());
    CHECK(dominated_vertices(Graph::complete(3)).size() == 6);
}

TEST_CASE("dominated_vertices matches the brute-force definition, n <= 6") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(6, 0.4, seed);
        CHECK(dominated_vertices(g) == oracle::brute_force_dominated(g));
    }
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs_up_to_iso(n))
            CHECK(dominated_vertices(g) == oracle::brute_force_dominated(g));
}

TEST_CASE("dismantle fixtures") {
    CHECK(dismantle(Graph::path(4)).reached_k1());
    auto c5 = dismantle(Graph::cycle(5));
    CHECK(c5.steps.empty());
    CHECK(c5.core == Graph::cycle(5));
    CHECK_FALSE(oracle::exhaustive_dismantle_reaches_k1(Graph::cycle(5)));
    CHECK(dismantle(Graph::wheel(5)).reached_k1());
    CHECK_THROWS_AS(dismantle(Graph()), GraphError);
}

TEST_CASE("dismantling steps replay to the core") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(7, 0.5, seed);
        DismantlingTrace t = dismantle(g);
        Graph cur = g;
        for (auto [v, w] : t.steps) {
            // domination must hold in the graph current at that step
            VertexSet nv = cur.closed_neighborhood(v);
            VertexSet nw = cur.closed_neighborhood(w);
            CHECK(std::includes(nw.begin(), nw.end(), nv.begin(), nv.end()));
            cur = cur.delete_vertex(v);
        }
        CHECK(cur == t.core);
    }
}

TEST_CASE("greedy dismantling is complete on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::all_graphs_up_to_iso(n))
            CHECK(is_dismantlable(g) == oracle::exhaustive_dismantle_reaches_k1(g));
}

TEST_CASE("is_s_dismantlable") {
    Graph k4 = Graph::complete(4);
    for (Vertex v : k4.vertices()) CHECK(is_s_dismantlable(k4, v));
    Graph c4 = Graph::cycle(4);
    for (Vertex v : c4.vertices()) CHECK_FALSE(is_s_dismantlable(c4, v));
    CHECK_FALSE(is_s_dismantlable(Graph::wheel(5), 5));  // apex link is C5
    CHECK_FALSE(is_s_dismantlable(Graph::on_vertices(1), 0));
    CHECK_THROWS_AS(is_s_dismantlable(c4, 9), GraphError);
}

TEST_CASE("s_reduce fixtures") {
    CHECK(s_reduce(Graph::complete(5)).reached_k1());
    STrace c6 = s_reduce(Graph::cycle(6));
    CHECK(c6.deletions.empty());
    CHECK(c6.terminal == Graph::cycle(6));
    STrace oct = s_reduce(Graph::octahedron());
    CHECK(oct.deletions.empty());
    CHECK(oct.terminal == Graph::octahedron());
    CHECK_FALSE(oracle::exhaustive_dismantle_reaches_k1(
        Graph::octahedron().induced(Graph::octahedron().neighbors(0))));
    CHECK_THROWS_AS(s_reduce(Graph()), GraphError);
}

TEST_CASE("certify_contractible fixtures") {
    CHECK(certify_contractible(Graph::on_vertices(1)).yes());
    Verdict c5 = certify_contractible(Graph::cycle(5));
    REQUIRE(c5.no());
    REQUIRE(c5.witness.has_value());
    CHECK_FALSE(c5.witness->trivial());
    REQUIRE(c5.witness->betti.size() >= 2);
    CHECK(c5.witness->betti[1] == 1);
    CHECK(certify_contractible(Graph::wheel(5)).yes());
    CHECK_THROWS_AS(certify_contractible(Graph()), GraphError);
}

TEST_CASE("s-dismantlable links certify contractible") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(8, 0.5, seed);
        for (Vertex v : g.vertices())
            if (is_s_dismantlable(g, v))
                CHECK(certify_contractible(g.induced(g.neighbors(v))).yes());
    }
}

TEST_CASE("certifier verdicts agree across budgets and certificates replay") {
    std::vector<Budget> budgets = {Budget{1000, 4}, Budget{10000, 8}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(7, 0.45, seed);
        bool saw_yes = false, saw_no = false;
        for (const Budget& b : budgets) {
            Verdict v = certify_contractible(g, b);
            if (v.yes()) {
                saw_yes = true;
                REQUIRE(v.certificate.has_value());
                VerifyResult r = verify_trace(*v.certificate);
                CHECK(r.ok);
                CHECK(v.certificate->end.vertex_count() == 1);
            } else if (v.no()) {
                saw_no = true;
            }
        }
        CHECK_FALSE((saw_yes && saw_no));
        if (saw_yes) CHECK(homology(clique_complex(g)).trivial());
    }
}

TEST_CASE("dismantling_to_moves produces a verifiable I1 trace") {
    Graph g = Graph::wheel(5);
    DismantlingTrace t = dismantle(g);
    REQUIRE(t.reached_k1());
    ITrace moves = dismantling_to_moves(g, t);
    CHECK(moves.end.vertex_count() == 1);
    VerifyResult r = verify_trace(moves);
    CHECK(r.ok);
}
