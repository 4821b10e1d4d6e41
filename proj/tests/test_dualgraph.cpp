#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "lers/dualgraph.hpp"
#include "lers/rng.hpp"
#include "lers/ust.hpp"

using namespace lers;

TEST_CASE("n = 1 dual graph is two vertices joined by six parallel edges")
{
    const auto cx = build_complex(1);
    const auto dual = build_dual(cx);
    CHECK(dual.num_vertices() == 2);
    CHECK(dual.num_edges() == 6);
    for (std::size_t e = 0; e < 6; ++e) {
        auto [a, b] = dual.graph().endpoints(e);
        CHECK(std::set<std::size_t>{a, b} == std::set<std::size_t>{0, dual.infinity()});
    }
    // the bottom face joins the cube to infinity
    const auto bottom = cx.face_index(Axis::Z, {0, 0, 0});
    auto [a, b] = dual.graph().endpoints(dual.dual_edge_of_face(bottom));
    CHECK(a == 0);
    CHECK(b == dual.infinity());
}

TEST_CASE("n = 2 dual graph degrees")
{
    const auto cx = build_complex(2);
    const auto dual = build_dual(cx);
    CHECK(dual.num_vertices() == 9);
    CHECK(dual.num_edges() == 36);
    CHECK(dual.graph().degree(dual.infinity()) == 24);

    const auto f = cx.face_index(Axis::X, {1, 0, 0});
    auto [a, b] = dual.graph().endpoints(dual.dual_edge_of_face(f));
    CHECK(std::set<std::size_t>{a, b} ==
          std::set<std::size_t>{cx.cube_index({0, 0, 0}), cx.cube_index({1, 0, 0})});
}

TEST_CASE("dual graph structure for n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const auto cx = build_complex(n);
        const auto dual = build_dual(cx);
        const auto& g = dual.graph();
        const std::size_t m = static_cast<std::size_t>(n);
        REQUIRE(g.num_vertices() == m * m * m + 1);
        REQUIRE(g.num_edges() == 3 * m * m * (m + 1));
        CHECK(g.degree(dual.infinity()) == 6 * m * m);

        std::size_t degree_sum = 0;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.num_edges());
        CHECK(degree_sum == 6 * m * m * (m + 1));
        CHECK(g.connected());

        // D is a bijection and each cube vertex sees exactly its own 6 faces.
        for (std::size_t f = 0; f < cx.num_faces(); ++f)
            REQUIRE(dual.dual_face_of_edge(dual.dual_edge_of_face(f)) == f);
        for (std::size_t c = 0; c < cx.num_cubes(); ++c) {
            const auto v = dual.vertex_of_cube(c);
            REQUIRE(dual.cube_of_vertex(v) == c);
            std::multiset<std::size_t> seen;
            for (const auto& s : g.incident(v)) {
                seen.insert(dual.dual_face_of_edge(s.edge));
                REQUIRE(s.other != v);
            }
            const auto faces = cx.cube_faces(c);
            REQUIRE(seen == std::multiset<std::size_t>(faces.begin(), faces.end()));
        }
    }
}

TEST_CASE("dual vertex lookups")
{
    const auto cx = build_complex(1);
    const auto dual = build_dual(cx);
    CHECK(dual.cube_of_vertex(0) == 0);
    CHECK_THROWS_AS(dual.cube_of_vertex(dual.infinity()), std::invalid_argument);
    CHECK(dual.describe(dual.infinity()).infinity);
    CHECK_FALSE(dual.describe(0).infinity);
    CHECK_THROWS_AS(dual.dual_edge_of_face(6), std::out_of_range);
    CHECK_THROWS_AS(dual.dual_face_of_edge(99), std::out_of_range);
}

TEST_CASE("removing the faces of a dual spanning tree leaves |faces| - n^3")
{
    for (int n = 1; n <= 5; ++n) {
        const auto cx = build_complex(n);
        const auto dual = build_dual(cx);
        RngStream rng(derive_seed(3, {static_cast<std::uint64_t>(n)}));
        const auto tree = wilson(dual.graph(), dual.infinity(), rng);
        Chain2 faces = cx.all_faces();
        for (auto e : tree.edges)
            faces.erase(dual.dual_face_of_edge(e));
        CHECK(faces.count() == cx.num_faces() - cx.num_cubes());
    }
}
