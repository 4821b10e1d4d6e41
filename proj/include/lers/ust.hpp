#ifndef LERS_UST_HPP
#define LERS_UST_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "rng.hpp"

namespace lers
{

using BigInt = boost::multiprecision::cpp_int;

inline constexpr Multigraph::edge_type kNoEdge = std::numeric_limits<Multigraph::edge_type>::max();

/// A spanning tree stored as its edge ids (in the order they were added) plus
/// the parent edge of every vertex with respect to `root`.
struct SpanningTree
{
    Multigraph::vertex_type root = 0;
    std::vector<Multigraph::edge_type> edges;
    std::vector<Multigraph::edge_type> parent_edge;
    std::uint64_t steps = 0;
};

enum class StepKind : std::uint8_t { Move, TreeEdgeAdded };

/// One event of a covering walk. For TreeEdgeAdded, `from` is the endpoint
/// already in the tree and `to` the newly reached vertex.
struct StepEvent
{
    StepKind kind;
    Multigraph::edge_type edge;
    Multigraph::vertex_type from;
    Multigraph::vertex_type to;
};

struct NullVisitor
{
    void operator()(const StepEvent&) const noexcept {}
};

/// Thrown when a walk exceeds its step budget (typically a disconnected graph).
class SamplerAbort : public std::runtime_error
{
public:
    explicit SamplerAbort(const std::string& what) : std::runtime_error(what) {}
};

/// 10^4 * |V| * log2(|V| + 1): far beyond the expected cover time of any
/// connected graph we sample.
inline std::uint64_t default_step_cap(std::size_t num_vertices)
{
    const double v = static_cast<double>(num_vertices);
    const double cap = 1e4 * v * std::log2(v + 1.0);
    if (cap >= 1.8e19)
        return std::numeric_limits<std::uint64_t>::max();
    return std::max<std::uint64_t>(static_cast<std::uint64_t>(cap), 1000);
}

struct WalkLimits
{
    std::uint64_t max_steps = 0; ///< 0 selects default_step_cap().

    std::uint64_t resolve(std::size_t num_vertices) const
    {
        return max_steps != 0 ? max_steps : default_step_cap(num_vertices);
    }
};

namespace detail
{

inline void check_vertex(const Multigraph& g, std::size_t v)
{
    if (v >= g.num_vertices())
        throw std::out_of_range("start vertex " + std::to_string(v) + " out of range");
}

[[noreturn]] inline void abort_walk(const char* who, std::uint64_t steps, std::size_t covered,
                                    std::size_t total)
{
    throw SamplerAbort(std::string(who) + ": step cap of " + std::to_string(steps) +
                       " reached with " + std::to_string(covered) + " of " +
                       std::to_string(total) + " vertices in the tree (graph disconnected?)");
}

} // namespace detail

/// Aldous-Broder: walk from `start` until every vertex is visited; the edge
/// of first entry into each vertex forms a uniform spanning tree.
///
/// Each step picks a uniformly random incidence slot, so parallel edges are
/// weighted by multiplicity. `visit` receives every StepEvent synchronously,
/// a Move for each step followed by a TreeEdgeAdded when the step reaches a
/// new vertex.
template <typename Visitor>
SpanningTree aldous_broder(const Multigraph& g, Multigraph::vertex_type start, RngStream& rng,
                           Visitor&& visit, WalkLimits limits = {})
{
    detail::check_vertex(g, start);
    const std::size_t nv = g.num_vertices();
    const std::uint64_t cap = limits.resolve(nv);

    SpanningTree tree;
    tree.root = start;
    tree.parent_edge.assign(nv, kNoEdge);
    tree.edges.reserve(nv - 1);

    std::vector<char> in_tree(nv, 0);
    in_tree[start] = 1;
    std::size_t remaining = nv - 1;
    Multigraph::vertex_type v = start;
    std::uint64_t steps = 0;

    while (remaining > 0) {
        if (steps >= cap)
            detail::abort_walk("aldous_broder", cap, nv - remaining, nv);
        const std::size_t deg = g.degree_unchecked(v);
        if (deg == 0)
            detail::abort_walk("aldous_broder", steps, nv - remaining, nv);
        const auto& slot = g.slot_unchecked(v, rng.bounded(deg));
        ++steps;
        visit(StepEvent{StepKind::Move, slot.edge, v, slot.other});
        if (!in_tree[slot.other]) {
            in_tree[slot.other] = 1;
            tree.parent_edge[slot.other] = slot.edge;
            tree.edges.push_back(slot.edge);
            --remaining;
            visit(StepEvent{StepKind::TreeEdgeAdded, slot.edge, v, slot.other});
        }
        v = slot.other;
    }
    tree.steps = steps;
    return tree;
}

inline SpanningTree aldous_broder(const Multigraph& g, Multigraph::vertex_type start,
                                  RngStream& rng, WalkLimits limits = {})
{
    return aldous_broder(g, start, rng, NullVisitor{}, limits);
}

/// Wilson's algorithm: attach each vertex not yet in the tree by a
/// loop-erased random walk that stops on hitting the tree. Loop erasure is
/// implicit: only the last exit from each vertex is remembered.
inline SpanningTree wilson(const Multigraph& g, Multigraph::vertex_type root, RngStream& rng,
                           WalkLimits limits = {})
{
    detail::check_vertex(g, root);
    const std::size_t nv = g.num_vertices();
    const std::uint64_t cap = limits.resolve(nv);

    SpanningTree tree;
    tree.root = root;
    tree.parent_edge.assign(nv, kNoEdge);
    tree.edges.reserve(nv - 1);

    std::vector<char> in_tree(nv, 0);
    std::vector<const Multigraph::Slot*> next(nv, nullptr);
    in_tree[root] = 1;
    std::uint64_t steps = 0;

    for (std::size_t i = 0; i < nv; ++i) {
        std::size_t u = i;
        while (!in_tree[u]) {
            if (steps >= cap)
                detail::abort_walk("wilson", cap, tree.edges.size() + 1, nv);
            const std::size_t deg = g.degree_unchecked(u);
            if (deg == 0)
                detail::abort_walk("wilson", steps, tree.edges.size() + 1, nv);
            next[u] = &g.slot_unchecked(u, rng.bounded(deg));
            ++steps;
            u = next[u]->other;
        }
        u = i;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            tree.parent_edge[u] = next[u]->edge;
            tree.edges.push_back(next[u]->edge);
            u = next[u]->other;
        }
    }
    tree.steps = steps;
    return tree;
}

/// Chronological loop erasure of a walk given as a vertex sequence: whenever
/// a vertex repeats, the cycle since its previous visit is removed.
inline std::vector<Multigraph::vertex_type> loop_erase(const Multigraph& g,
                                                       std::span<const Multigraph::vertex_type> walk)
{
    std::vector<Multigraph::vertex_type> path;
    std::unordered_map<Multigraph::vertex_type, std::size_t> position;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto v = walk[i];
        if (i > 0 && !g.adjacent(walk[i - 1], v))
            throw std::invalid_argument("walk steps " + std::to_string(i - 1) + " -> " +
                                        std::to_string(i) + " are not adjacent");
        auto it = position.find(v);
        if (it != position.end()) {
            for (std::size_t k = it->second + 1; k < path.size(); ++k)
                position.erase(path[k]);
            path.resize(it->second + 1);
        } else {
            position.emplace(v, path.size());
            path.push_back(v);
        }
    }
    return path;
}

/// True iff `edges` is a spanning tree of g.
inline bool is_spanning_tree(const Multigraph& g, std::span<const Multigraph::edge_type> edges)
{
    if (g.num_vertices() == 0)
        return edges.empty();
    if (edges.size() != g.num_vertices() - 1)
        return false;
    UnionFind uf(g.num_vertices());
    for (auto e : edges) {
        if (e >= g.num_edges())
            return false;
        const auto [a, b] = g.endpoints(e);
        if (!uf.unite(a, b))
            return false;
    }
    return uf.components() == 1;
}

/// Exact number of spanning trees: determinant of the reduced Laplacian by
/// fraction-free (Bareiss) elimination. Self-loops do not contribute.
inline BigInt count_spanning_trees(const Multigraph& g)
{
    const std::size_t nv = g.num_vertices();
    if (nv <= 1)
        return BigInt(1);
    const std::size_t m = nv - 1;
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.endpoints(e);
        if (u == v)
            continue;
        if (u < m)
            a[u][u] += 1;
        if (v < m)
            a[v][v] += 1;
        if (u < m && v < m) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }

    BigInt prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < m && a[r][k] == 0)
                ++r;
            if (r == m)
                return BigInt(0);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    BigInt det = a[m - 1][m - 1];
    return negate ? BigInt(-det) : det;
}

} // namespace lers

#endif
