#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "lers/dualgraph.hpp"
#include "lers/oracle.hpp"
#include "lers/stats.hpp"
#include "lers/ust.hpp"

using namespace lers;

namespace
{

using EdgeList = std::vector<Multigraph::edge_type>;

EdgeList sorted(EdgeList e)
{
    std::sort(e.begin(), e.end());
    return e;
}

// Tree frequencies of a sampler against the enumerated tree list.
template <typename Sampler>
std::vector<std::uint64_t> tree_histogram(const Multigraph& g, const std::vector<EdgeList>& trees,
                                          std::uint64_t runs, std::uint64_t seed, Sampler sample)
{
    std::map<EdgeList, std::size_t> index;
    for (std::size_t i = 0; i < trees.size(); ++i)
        index[sorted(trees[i])] = i;
    std::vector<std::uint64_t> hist(trees.size(), 0);
    for (std::uint64_t r = 0; r < runs; ++r) {
        RngStream rng(derive_seed(seed, {r}));
        const SpanningTree t = sample(g, rng);
        REQUIRE(is_spanning_tree(g, t.edges));
        auto it = index.find(sorted(t.edges));
        REQUIRE(it != index.end());
        ++hist[it->second];
    }
    return hist;
}

auto ab = [](const Multigraph& g, RngStream& rng) { return aldous_broder(g, 0, rng); };
auto wi = [](const Multigraph& g, RngStream& rng) { return wilson(g, 0, rng); };

Multigraph doubled_triangle()
{
    return Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
}

Multigraph cycle_with_chord()
{
    return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
}

} // namespace

TEST_CASE("RngStream uses the standard mt19937_64 sequence")
{
    RngStream rng(5489);
    for (int i = 0; i < 9999; ++i)
        rng();
    CHECK(rng() == 9981545732273789042ULL);
}

TEST_CASE("RngStream bounded draws are uniform and reproducible")
{
    RngStream a(11);
    RngStream b(11);
    std::vector<std::uint64_t> hist(6, 0);
    for (int i = 0; i < 60000; ++i) {
        const auto x = a.bounded(6);
        REQUIRE(x == b.bounded(6));
        ++hist[x];
    }
    CHECK(chi_square_gof(hist, std::vector<double>(6, 1.0 / 6.0), 0.01).pass);
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
}

TEST_CASE("count_spanning_trees by the matrix-tree theorem")
{
    CHECK(count_spanning_trees(graphs::triangle()) == 3);
    CHECK(count_spanning_trees(graphs::complete(4)) == 16);
    CHECK(count_spanning_trees(graphs::complete(5)) == 125);
    CHECK(count_spanning_trees(graphs::path(3)) == 1);
    CHECK(count_spanning_trees(doubled_triangle()) == 5);
    CHECK(count_spanning_trees(Multigraph(4, {{0, 1}, {2, 3}})) == 0);

    const auto c1 = build_complex(1);
    CHECK(count_spanning_trees(build_dual(c1).graph()) == 6);
    // sympy determinant of the reduced Laplacian, computed independently
    const auto c2 = build_complex(2);
    CHECK(count_spanning_trees(build_dual(c2).graph()) == 1157625);
    const auto c3 = build_complex(3);
    CHECK(count_spanning_trees(build_dual(c3).graph()) == BigInt("170875128460147163136"));
}

TEST_CASE("Aldous-Broder emits events in walk order")
{
    const auto cx = build_complex(3);
    const auto dual = build_dual(cx);
    const auto& g = dual.graph();
    RngStream rng(5);
    std::uint64_t moves = 0;
    std::set<Multigraph::vertex_type> reached{dual.infinity()};
    std::vector<Multigraph::edge_type> added;
    Multigraph::vertex_type at = dual.infinity();
    const auto tree = aldous_broder(g, dual.infinity(), rng, [&](const StepEvent& ev) {
        if (ev.kind == StepKind::Move) {
            REQUIRE(ev.from == at);
            auto [a, b] = g.endpoints(ev.edge);
            REQUIRE(((a == ev.from && b == ev.to) || (b == ev.from && a == ev.to)));
            at = ev.to;
            ++moves;
        } else {
            REQUIRE(ev.to == at);
            REQUIRE(reached.count(ev.from) == 1);
            REQUIRE(reached.insert(ev.to).second);
            REQUIRE_FALSE(dual.is_infinity(ev.to));
            added.push_back(ev.edge);
        }
    });
    CHECK(moves == tree.steps);
    CHECK(added.size() == g.num_vertices() - 1);
    CHECK(added == tree.edges);
    CHECK(reached.size() == g.num_vertices());
    CHECK(is_spanning_tree(g, tree.edges));
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        CHECK((v == tree.root) == (tree.parent_edge[v] == kNoEdge));
}

TEST_CASE("samplers produce valid trees on every run")
{
    const auto cx = build_complex(4);
    const auto dual = build_dual(cx);
    const auto& g = dual.graph();
    for (std::uint64_t s = 0; s < 50; ++s) {
        RngStream r1(s);
        RngStream r2(s);
        REQUIRE(is_spanning_tree(g, aldous_broder(g, static_cast<Multigraph::vertex_type>(s % 65), r1).edges));
        REQUIRE(is_spanning_tree(g, wilson(g, static_cast<Multigraph::vertex_type>(s % 65), r2).edges));
    }
}

TEST_CASE("path graph has one spanning tree")
{
    const auto g = graphs::path(3);
    for (std::uint64_t s = 0; s < 20; ++s) {
        RngStream rng(s);
        CHECK(sorted(wilson(g, 0, rng).edges) == EdgeList{0, 1});
        CHECK(sorted(aldous_broder(g, 2, rng).edges) == EdgeList{0, 1});
    }
}

TEST_CASE("disconnected graphs abort at the step cap")
{
    const Multigraph g(4, {{0, 1}, {2, 3}});
    RngStream rng(1);
    CHECK_THROWS_AS(aldous_broder(g, 0, rng, WalkLimits{1000}), SamplerAbort);
    CHECK_THROWS_AS(wilson(g, 0, rng, WalkLimits{1000}), SamplerAbort);
    CHECK_THROWS_AS(aldous_broder(g, 0, rng), SamplerAbort);
    const Multigraph isolated(2, {});
    CHECK_THROWS_AS(aldous_broder(isolated, 0, rng), SamplerAbort);
    CHECK_THROWS_AS(aldous_broder(g, 7, rng), std::out_of_range);
}

TEST_CASE("uniformity on the n = 1 dual graph and the triangle")
{
    const auto cx = build_complex(1);
    const auto dual = build_dual(cx);
    struct Case
    {
        const char* name;
        Multigraph g;
    };
    const std::vector<Case> cases{{"n=1 dual", dual.graph()}, {"triangle", graphs::triangle()}};
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto trees = enumerate_trees(c.g);
        const std::vector<double> uniform(trees.size(), 1.0 / static_cast<double>(trees.size()));
        const auto h_ab = tree_histogram(c.g, trees, 60000, 101, ab);
        const auto h_wi = tree_histogram(c.g, trees, 60000, 202, wi);
        CHECK(chi_square_gof(h_ab, uniform, 0.01).pass);
        CHECK(chi_square_gof(h_wi, uniform, 0.01).pass);
        CHECK(chi_square_two_sample(h_ab, h_wi, 0.01).pass);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            // per-tree frequencies agree within 3 sigma of the binomial
            const double p = uniform[i];
            const double sigma = std::sqrt(2.0 * p * (1 - p) / 60000.0);
            CHECK(std::abs(double(h_ab[i]) - double(h_wi[i])) / 60000.0 < 3 * sigma);
        }
    }
}

TEST_CASE("uniformity on small graphs with at most 20,000 trees")
{
    const std::vector<Multigraph> gs{graphs::complete(4), graphs::complete(5), doubled_triangle(),
                                     cycle_with_chord(), graphs::cycle(6)};
    std::uint64_t seed = 500;
    for (const auto& g : gs) {
        const auto count = count_spanning_trees(g);
        REQUIRE(count <= 20000);
        const auto trees = enumerate_trees(g);
        REQUIRE(trees.size() == count);
        const std::uint64_t runs = 60 * trees.size();
        const std::vector<double> uniform(trees.size(), 1.0 / static_cast<double>(trees.size()));
        CHECK(chi_square_gof(tree_histogram(g, trees, runs, ++seed, ab), uniform, 0.01).pass);
        CHECK(chi_square_gof(tree_histogram(g, trees, runs, ++seed, wi), uniform, 0.01).pass);
    }
}

TEST_CASE("loop_erase removes cycles chronologically")
{
    const auto g = graphs::complete(4);
    using V = std::vector<Multigraph::vertex_type>;
    CHECK(loop_erase(g, V{0, 1, 2}) == V{0, 1, 2});
    CHECK(loop_erase(g, V{0, 1, 0, 2}) == V{0, 2});
    CHECK(loop_erase(g, V{0, 1, 2, 3, 1, 2}) == V{0, 1, 2});
    CHECK(loop_erase(g, V{}) == V{});
    CHECK(loop_erase(g, V{3}) == V{3});

    const auto p = graphs::path(3);
    CHECK_THROWS_AS(loop_erase(p, V{0, 2}), std::invalid_argument);
}

TEST_CASE("loop erasure of random walks on a 4-cycle is self-avoiding")
{
    const auto g = graphs::cycle(4);
    RngStream rng(77);
    for (int t = 0; t < 10000; ++t) {
        std::vector<Multigraph::vertex_type> walk{static_cast<Multigraph::vertex_type>(rng.bounded(4))};
        const auto len = 1 + rng.bounded(30);
        for (std::uint64_t i = 0; i < len; ++i) {
            const auto& s = g.incident(walk.back())[rng.bounded(2)];
            walk.push_back(s.other);
        }
        const auto path = loop_erase(g, walk);
        REQUIRE(path.front() == walk.front());
        REQUIRE(path.back() == walk.back());
        REQUIRE(std::set<Multigraph::vertex_type>(path.begin(), path.end()).size() == path.size());
        for (std::size_t i = 1; i < path.size(); ++i)
            REQUIRE(g.adjacent(path[i - 1], path[i]));
    }
}
