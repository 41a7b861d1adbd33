#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ucpg/families.hpp"
#include "ucpg/plane_graph.hpp"

using namespace ucpg;

namespace {

std::map<int, int> degree_multiset(const PlaneGraph& g) {
    std::map<int, int> out;
    for (const auto& f : trace_faces(g))
        ++out[f.degree()];
    return out;
}

std::set<std::pair<int, int>> pair_degrees(const PlaneGraph& g) {
    std::set<std::pair<int, int>> out;
    for (const auto& p : adjacent_face_pairs(g))
        out.insert({p.degree_low, p.degree_high});
    return out;
}

}  // namespace

TEST_CASE("from_rotation_system accepts small graphs") {
    auto k3 = fixture::k3();
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    auto k2 = fixture::k2();
    CHECK(k2.edge_count() == 1);
    REQUIRE(k2.face_count() == 1);
    CHECK(k2.faces()[0].degree() == 2);

    auto k1 = PlaneGraph::from_rotation_system(1, {{}});
    CHECK(k1.face_count() == 1);
    CHECK(k1.faces()[0].degree() == 0);

    auto g3 = families::generate_gk(3);
    CHECK(g3.vertex_count() == 11);
    CHECK(g3.edge_count() == 21);
}

TEST_CASE("from_rotation_system rejects malformed systems") {
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(2, {{1}, {}}), doctest::Contains("asymmetric"),
                         GraphError);
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(2, {{0, 1}, {0}}), doctest::Contains("self-loop"),
                         GraphError);
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(2, {{1, 1}, {0, 0}}), doctest::Contains("multi-edge"),
                         GraphError);
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(4, {{1}, {0}, {3}, {2}}),
                         doctest::Contains("disconnected"), GraphError);
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(2, {{5}, {0}}), doctest::Contains("out of range"),
                         GraphError);
    CHECK_THROWS_AS(PlaneGraph::from_rotation_system(3, {{1}, {0}}), GraphError);
}

TEST_CASE("K4 with a twisted rotation has nonzero genus") {
    CHECK_NOTHROW(fixture::k4());
    // Swapping one rotation of a triangulation yields a torus embedding.
    CHECK_THROWS_WITH_AS(PlaneGraph::from_rotation_system(4, {{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}),
                         doctest::Contains("genus"), GraphError);
}

TEST_CASE("trace_faces") {
    CHECK(degree_multiset(fixture::k3()) == std::map<int, int>{{3, 2}});
    CHECK(degree_multiset(fixture::k2()) == std::map<int, int>{{2, 1}});

    // G_3 by hand: k inner triangles u v_{3i+1} v_{3i+2}, k inner quads,
    // k outer triangles w v_{3i} v_{3i+1}, k outer quads; |F| = 2 - n + m = 12.
    const auto g3 = families::generate_gk(3);
    CHECK(g3.face_count() == 2 - 11 + 21);
    CHECK(degree_multiset(g3) == std::map<int, int>{{3, 6}, {4, 6}});

    // The hand-identified triangles are faces.
    std::set<std::set<Vertex>> triangles;
    for (const auto& f : g3.faces())
        if (f.degree() == 3) {
            std::set<Vertex> vs;
            for (int d : f.darts)
                vs.insert(g3.tail(d));
            triangles.insert(vs);
        }
    for (int i = 0; i < 3; ++i) {
        CHECK(triangles.contains({families::gk_u, families::gk_cycle(3 * i + 1), families::gk_cycle(3 * i + 2)}));
        CHECK(triangles.contains({families::gk_w, families::gk_cycle(3 * i), families::gk_cycle(3 * i + 1)}));
    }
}

TEST_CASE("face tracing invariants hold across fixtures") {
    for (const auto& g : {fixture::k2(), fixture::k3(), fixture::k4(), fixture::c5(), fixture::two_triangles(),
                          families::generate_gk(3), families::generate_gk(5), families::generate_fan(7),
                          families::generate_octahedron(), families::generate_y9()}) {
        const auto faces = trace_faces(g);
        int total = 0;
        std::vector<int> owner(static_cast<std::size_t>(g.dart_count()), 0);
        for (const auto& f : faces) {
            total += f.degree();
            for (int d : f.darts)
                ++owner[d];
        }
        CHECK(total == 2 * g.edge_count());
        CHECK(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));
        CHECK(g.vertex_count() - g.edge_count() + static_cast<int>(faces.size()) == 2);
        // Deterministic: a second trace is identical.
        const auto again = trace_faces(g);
        REQUIRE(again.size() == faces.size());
        for (std::size_t i = 0; i < faces.size(); ++i)
            CHECK(again[i].darts == faces[i].darts);
        // Each trace starts at the lowest dart not yet used.
        for (std::size_t i = 1; i < faces.size(); ++i)
            CHECK(faces[i].darts.front() > faces[i - 1].darts.front());
    }
}

TEST_CASE("bridge sits on a single face") {
    const auto g = fixture::two_triangles();
    CHECK(degree_multiset(g) == std::map<int, int>{{3, 2}, {8, 1}});
    const int bridge = g.first_dart(2) + 2;
    CHECK(g.head(bridge) == 3);
    CHECK(g.face_of(bridge) == g.face_of(g.reverse(bridge)));
}

TEST_CASE("adjacent_face_pairs") {
    const auto k3 = adjacent_face_pairs(fixture::k3());
    REQUIRE(k3.size() == 1);
    CHECK(k3[0].degree_low == 3);
    CHECK(k3[0].degree_high == 3);
    CHECK(k3[0].shared_edges == 3);

    const auto g3 = pair_degrees(families::generate_gk(3));
    CHECK(g3.contains({3, 4}));
    CHECK_FALSE(g3.contains({3, 3}));
    CHECK_FALSE(g3.contains({3, 5}));

    CHECK(pair_degrees(families::generate_fan(6)) == std::set<std::pair<int, int>>{{3, 3}, {3, 6}});
    CHECK(adjacent_face_pairs(fixture::k2()).empty());

    // Unordered and listed once.
    for (const auto& g : {families::generate_gk(3), families::generate_octahedron(), families::generate_y9()}) {
        std::set<std::pair<int, int>> seen;
        for (const auto& p : adjacent_face_pairs(g)) {
            CHECK(p.face_a < p.face_b);
            CHECK(seen.insert({p.face_a, p.face_b}).second);
            CHECK(p.shared_edges >= 1);
        }
    }
}

TEST_CASE("is_k_connected") {
    CHECK(is_k_connected(fixture::k3(), 2));
    CHECK_FALSE(is_k_connected(fixture::k2(), 2));
    CHECK(is_k_connected(fixture::k2(), 1));
    CHECK(is_k_connected(families::generate_gk(3), 3));
    CHECK(is_k_connected(fixture::k4(), 3));
    CHECK_FALSE(is_k_connected(fixture::c5(), 3));
    CHECK(is_k_connected(fixture::c5(), 2));
    CHECK_FALSE(is_k_connected(fixture::two_triangles(), 2));
    CHECK_FALSE(is_k_connected(families::generate_fan(6), 3));
    CHECK_THROWS_AS(is_k_connected(fixture::k3(), 4), std::invalid_argument);
}

TEST_CASE("count_triangles matches the trace of A^3") {
    CHECK(count_triangles(fixture::k3()) == 1);
    CHECK(count_triangles(fixture::k2()) == 0);
    CHECK(count_triangles(families::generate_gk(3)) == 6);
    for (const auto& g : {fixture::k4(), fixture::c5(), fixture::two_triangles(), families::generate_gk(5),
                          families::generate_octahedron(), families::generate_fan(8)})
        CHECK(count_triangles(g) == oracle::triangles_by_trace(g.abstract()));
}

TEST_CASE("delete_edge") {
    const auto path = delete_edge(fixture::k3(), Edge(0, 1));
    CHECK(path.graph.is_connected());
    CHECK(path.graph.edge_count() == 2);
    CHECK(degree_multiset(path.graph) == std::map<int, int>{{4, 1}});

    const auto g3 = families::generate_gk(3);
    const auto cut = delete_edge(g3, Edge(families::gk_u, families::gk_cycle(1)));
    CHECK(cut.graph.edge_count() == 20);
    CHECK(cut.graph.is_connected());

    const auto split = delete_edge(fixture::k2(), Edge(0, 1));
    CHECK_FALSE(split.graph.is_connected());
    CHECK(split.graph.edge_count() == 0);
    CHECK_THROWS_AS(split.graph.faces(), std::logic_error);

    CHECK_THROWS_AS(delete_edge(fixture::k3(), Edge(0, 0)), GraphError);
    CHECK_THROWS_AS(delete_edge(fixture::c5(), Edge(0, 2)), GraphError);
}

TEST_CASE("delete_edge then insert_edge restores the rotations") {
    std::mt19937 rng(7);
    for (const auto& g : {families::generate_gk(3), families::generate_octahedron(), families::generate_y9(),
                          fixture::two_triangles()}) {
        auto edges = g.abstract().edges();
        std::shuffle(edges.begin(), edges.end(), rng);
        for (const Edge& e : edges) {
            const auto cut = delete_edge(g, e);
            const auto back = insert_edge(cut.graph, cut.edge, cut.position_at_u, cut.position_at_v);
            CHECK(back.rotations() == g.rotations());
        }
    }
}
