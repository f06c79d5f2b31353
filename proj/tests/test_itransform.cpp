#include "doctest.h"
#include "flagfold/homology.hpp"
#include "flagfold/itransform.hpp"
#include "oracles.hpp"

using namespace flagfold;

namespace {

Graph k3_plus_pendant_to_edge() {
    // K3 on 0,1,2 plus vertex 3 adjacent to {0,1}
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

}  // namespace

TEST_CASE("check_precondition verdicts") {
    CHECK(check_precondition(k3_plus_pendant_to_edge(), IMove::delete_vertex(3)).yes());
    CHECK(check_precondition(Graph::path(3), IMove::glue_edge(0, 2)).yes());
    Verdict c4 = check_precondition(Graph::cycle(4), IMove::delete_edge(0, 1));
    CHECK(c4.no());  // empty common neighborhood: a rejection, not an error
    CHECK_FALSE(c4.witness.has_value());
}

TEST_CASE("check_precondition structural errors") {
    Graph g = Graph::path(3);
    CHECK_THROWS_AS(check_precondition(g, IMove::delete_vertex(9)), GraphError);
    CHECK_THROWS_AS(check_precondition(g, IMove::delete_edge(0, 2)), GraphError);  // non-edge
    CHECK_THROWS_AS(check_precondition(g, IMove::glue_edge(0, 1)), GraphError);    // edge exists
    CHECK_THROWS_AS(check_precondition(g, IMove::glue_vertex({0, 9})), GraphError);
    // gluing over the empty set is rejected, not an error
    CHECK(check_precondition(g, IMove::glue_vertex({})).no());
}

TEST_CASE("apply_move") {
    MoveOutcome del = apply_move(k3_plus_pendant_to_edge(), IMove::delete_vertex(3));
    REQUIRE(del.applied());
    CHECK(*del.result == Graph::complete(3));

    MoveOutcome glue = apply_move(Graph::path(3), IMove::glue_edge(0, 2));
    REQUIRE(glue.applied());
    CHECK(*glue.result == Graph::complete(3));

    MoveOutcome grow = apply_move(Graph::complete(3), IMove::glue_vertex({0, 1, 2}));
    REQUIRE(grow.applied());
    CHECK(*grow.result == Graph::complete(4));

    MoveOutcome bad = apply_move(Graph::cycle(4), IMove::delete_edge(0, 1));
    CHECK_FALSE(bad.applied());
    CHECK(bad.precondition.no());
}

TEST_CASE("verify_trace") {
    Graph p3 = Graph::path(3);
    ITrace good{p3,
                {IMove::glue_edge(0, 2), IMove::delete_vertex(1)},
                Graph::from_vertex_set({0, 2}, {{0, 2}})};
    CHECK(verify_trace(good).ok);

    ITrace wrong_end = good;
    wrong_end.end = Graph::on_vertices(1);
    VerifyResult r = verify_trace(wrong_end);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_step == 2);  // mismatch reported at the move count

    ITrace bad{Graph::cycle(4), {IMove::delete_edge(0, 1)}, Graph::cycle(4).delete_edge(0, 1)};
    VerifyResult rb = verify_trace(bad);
    CHECK_FALSE(rb.ok);
    CHECK(rb.failed_step == 0);
}

TEST_CASE("reduce_via_moves") {
    Verdict k4 = reduce_via_moves(Graph::complete(4));
    REQUIRE(k4.yes());
    REQUIRE(k4.certificate.has_value());
    CHECK(k4.certificate->end.vertex_count() == 1);
    CHECK(verify_trace(*k4.certificate).ok);

    Verdict c6 = reduce_via_moves(Graph::cycle(6));
    CHECK(c6.no());  // refuted by homology before any search

    Verdict two_points = reduce_via_moves(Graph::on_vertices(2));
    REQUIRE(two_points.no());
    REQUIRE(two_points.witness.has_value());
    CHECK(two_points.witness->betti[0] == 1);  // reduced

    CHECK_THROWS_AS(reduce_via_moves(Graph()), GraphError);
}

TEST_CASE("moves preserve clique-complex homology") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = random_graph(8, 0.5, seed + 500);
        HomologyProfile before = homology(clique_complex(g));
        std::vector<IMove> candidates;
        for (Vertex v : g.vertices()) candidates.push_back(IMove::delete_vertex(v));
        for (Vertex v : g.vertices())
            for (Vertex w : g.vertices()) {
                if (v >= w) continue;
                if (g.has_edge(v, w))
                    candidates.push_back(IMove::delete_edge(v, w));
                else
                    candidates.push_back(IMove::glue_edge(v, w));
            }
        for (Vertex v : g.vertices()) candidates.push_back(IMove::glue_vertex(g.closed_neighborhood(v)));
        for (const IMove& m : candidates) {
            MoveOutcome out = apply_move(g, m);
            if (!out.applied()) continue;
            CHECK(homology(clique_complex(*out.result)) == before);
            CHECK(euler_characteristic(clique_complex(*out.result)) ==
                  euler_characteristic(clique_complex(g)));
        }
    }
}

TEST_CASE("delete-edge then glue-edge restores the graph") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(7, 0.5, seed + 900);
        for (auto [v, w] : g.edges()) {
            MoveOutcome del = apply_move(g, IMove::delete_edge(v, w));
            if (!del.applied()) continue;
            // toggling {v,w} does not change N(v,w), so the inverse is certified
            MoveOutcome back = apply_move(*del.result, IMove::glue_edge(v, w));
            REQUIRE(back.applied());
            CHECK(*back.result == g);
        }
    }
}

TEST_CASE("s_reduce deletions are accepted as I1 moves") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = random_graph(8, 0.55, seed);
        STrace t = s_reduce(g);
        Graph cur = g;
        for (Vertex v : t.deletions) {
            CHECK(check_precondition(cur, IMove::delete_vertex(v)).yes());
            cur = cur.delete_vertex(v);
        }
        CHECK(cur == t.terminal);
    }
}
