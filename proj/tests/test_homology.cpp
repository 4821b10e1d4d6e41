#include <catch_amalgamated.hpp>

#include <vector>

#include "lers/dualgraph.hpp"
#include "lers/homology.hpp"
#include "lers/surface.hpp"
#include "lers/ust.hpp"

using namespace lers;

namespace
{

// Textbook Gaussian elimination on a dense 0/1 table.
std::size_t naive_rank(std::vector<std::vector<int>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && a[r][c] == 1)
                for (std::size_t k = 0; k < cols; ++k)
                    a[r][k] ^= a[rank][k];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> dense(const Gf2Matrix& m)
{
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.get(r, c) ? 1 : 0;
    return a;
}

} // namespace

TEST_CASE("gf2_rank basics")
{
    CHECK(gf2_rank(Gf2Matrix(7, 9)) == 0);
    for (std::size_t k : {1, 5, 64, 65, 130}) {
        Gf2Matrix id(k, k);
        for (std::size_t i = 0; i < k; ++i)
            id.set(i, i);
        CHECK(gf2_rank(id) == k);
    }
    const auto cx = build_complex(1);
    const Gf2Matrix d2 = boundary_matrix(cx, 2);
    CHECK(d2.rows() == 12);
    CHECK(d2.cols() == 6);
    CHECK(gf2_rank(d2) == 5);
}

TEST_CASE("gf2_rank agrees with naive elimination on random matrices")
{
    RngStream rng(9);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + rng.bounded(64);
        const std::size_t cols = 1 + rng.bounded(t < 200 ? 64 : 150);
        const std::uint64_t density = 1 + rng.bounded(4);
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.bounded(density + 1) == 0)
                    m.set(r, c);
        REQUIRE(gf2_rank(m) == naive_rank(dense(m)));
    }
}

TEST_CASE("Betti numbers of the full lattice surface complex")
{
    const auto c1 = build_complex(1);
    const BettiReport r1 = betti(c1.all_faces(), c1);
    CHECK(r1.b0 == 1);
    CHECK(r1.b1 == 0);
    CHECK(r1.b2 == 1);

    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto cx = build_complex(n);
        const BettiReport r = betti(cx.all_faces(), cx);
        CHECK(r.b0 == 1);
        CHECK(r.b1 == 0);
        CHECK(r.b2 == cx.num_cubes());
        // Euler characteristic
        const long chi = long(cx.num_vertices()) - long(cx.num_edges()) + long(cx.num_faces());
        CHECK(chi == long(r.b0) - long(r.b1) + long(r.b2));
        if (n <= 3) {
            CHECK(naive_rank(dense(boundary_matrix(cx, 2))) == boundary_rank(cx, cx.all_faces()));
            CHECK(naive_rank(dense(boundary_matrix(cx, 1))) == cx.num_vertices() - 1);
        }
    }
}

TEST_CASE("verify_2tree")
{
    const auto c1 = build_complex(1);
    CHECK_FALSE(verify_2tree(c1.all_faces(), c1));
    Chain2 four = c1.all_faces();
    four.erase(0);
    four.erase(1);
    CHECK_FALSE(verify_2tree(four, c1));
    CHECK(betti(four, c1).b1 == 1);
    Chain2 five = c1.all_faces();
    five.erase(3);
    CHECK(verify_2tree(five, c1));

    for (int n = 1; n <= 4; ++n) {
        const auto cx = build_complex(n);
        const auto dual = build_dual(cx);
        for (std::uint64_t s = 0; s < 25; ++s) {
            RngStream rng(derive_seed(s, {static_cast<std::uint64_t>(n)}));
            const auto tree = aldous_broder(dual.graph(), dual.infinity(), rng);
            REQUIRE(verify_2tree(two_tree_faces(tree, cx), cx));
        }
    }
}

TEST_CASE("solve_bounded_chain outcomes on the unit cube")
{
    const auto cx = build_complex(1);
    const Chain1 loop = equatorial_loop(cx);
    const auto bottom = cx.face_index(Axis::Z, {0, 0, 0});

    const BoundedChain all = solve_bounded_chain(cx.all_faces(), loop, cx);
    CHECK(all.status == SolveStatus::NonUnique);
    CHECK(all.kernel_dim == 1);
    CHECK(cx.boundary(all.chain) == loop);

    Chain2 five = cx.all_faces();
    five.erase(bottom);
    const BoundedChain open = solve_bounded_chain(five, loop, cx);
    CHECK(open.status == SolveStatus::Unique);
    CHECK(open.chain == five);

    const BoundedChain none = solve_bounded_chain(cx.empty_chain2(), loop, cx);
    CHECK(none.status == SolveStatus::NoSolution);

    const BoundedChain zero = solve_bounded_chain(cx.empty_chain2(), cx.empty_chain1(), cx);
    CHECK(zero.status == SolveStatus::Unique);
    CHECK(zero.chain.empty());

    CHECK_THROWS_AS(solve_bounded_chain(Chain2(3), loop, cx), std::invalid_argument);
}
