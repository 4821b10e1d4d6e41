#ifndef LERS_GRAPH_HPP
#define LERS_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lers
{

/// Undirected finite multigraph with dense vertex and edge ids. Parallel
/// edges and self-loops are allowed; a self-loop occupies two incidence
/// slots at its vertex.
class Multigraph
{
public:
    using vertex_type = std::uint32_t;
    using edge_type = std::uint32_t;

    struct Slot
    {
        edge_type edge;
        vertex_type other;
    };

    Multigraph() = default;

    Multigraph(std::size_t num_vertices, std::vector<std::array<vertex_type, 2>> edges)
        : num_vertices_(num_vertices), endpoints_(std::move(edges))
    {
        std::vector<std::size_t> deg(num_vertices_, 0);
        for (const auto& [a, b] : endpoints_) {
            if (a >= num_vertices_ || b >= num_vertices_)
                throw std::out_of_range("edge endpoint out of range");
            ++deg[a];
            ++deg[b];
        }
        offsets_.assign(num_vertices_ + 1, 0);
        for (std::size_t v = 0; v < num_vertices_; ++v)
            offsets_[v + 1] = offsets_[v] + deg[v];
        slots_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::size_t e = 0; e < endpoints_.size(); ++e) {
            const auto [a, b] = endpoints_[e];
            slots_[fill[a]++] = {static_cast<edge_type>(e), b};
            slots_[fill[b]++] = {static_cast<edge_type>(e), a};
        }
    }

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    std::size_t num_edges() const noexcept { return endpoints_.size(); }

    std::array<vertex_type, 2> endpoints(std::size_t e) const
    {
        if (e >= endpoints_.size())
            throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
        return endpoints_[e];
    }

    std::size_t degree(std::size_t v) const { return incident(v).size(); }

    std::span<const Slot> incident(std::size_t v) const
    {
        if (v >= num_vertices_)
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
        return {slots_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    // Hot-path accessors for samplers; callers guarantee v is valid.
    std::size_t degree_unchecked(std::size_t v) const noexcept
    {
        return offsets_[v + 1] - offsets_[v];
    }
    const Slot& slot_unchecked(std::size_t v, std::size_t k) const noexcept
    {
        return slots_[offsets_[v] + k];
    }

    bool adjacent(std::size_t u, std::size_t v) const
    {
        for (const auto& s : incident(u))
            if (s.other == v)
                return true;
        return false;
    }

    bool connected() const
    {
        if (num_vertices_ == 0)
            return true;
        std::vector<char> seen(num_vertices_, 0);
        std::vector<vertex_type> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (const auto& s : incident(v)) {
                if (!seen[s.other]) {
                    seen[s.other] = 1;
                    ++reached;
                    stack.push_back(s.other);
                }
            }
        }
        return reached == num_vertices_;
    }

private:
    std::size_t num_vertices_ = 0;
    std::vector<std::array<vertex_type, 2>> endpoints_;
    std::vector<std::size_t> offsets_;
    std::vector<Slot> slots_;
};

/// Disjoint-set forest with union by size and optional rollback (no path
/// compression, so unions can be undone in LIFO order).
class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v) const noexcept
    {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }

    /// Returns false if already joined. Successful unions can be undone.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        ++merges_;
        return true;
    }

    void rollback()
    {
        const std::size_t b = history_.back();
        history_.pop_back();
        const std::size_t a = parent_[b];
        size_[a] -= size_[b];
        parent_[b] = b;
        --merges_;
    }

    std::size_t components() const noexcept { return parent_.size() - merges_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> history_;
    std::size_t merges_ = 0;
};

namespace graphs
{

inline Multigraph path(std::size_t k)
{
    std::vector<std::array<Multigraph::vertex_type, 2>> e;
    for (std::size_t i = 0; i + 1 < k; ++i)
        e.push_back({static_cast<Multigraph::vertex_type>(i), static_cast<Multigraph::vertex_type>(i + 1)});
    return Multigraph(k, std::move(e));
}

inline Multigraph cycle(std::size_t k)
{
    std::vector<std::array<Multigraph::vertex_type, 2>> e;
    for (std::size_t i = 0; i < k; ++i)
        e.push_back({static_cast<Multigraph::vertex_type>(i), static_cast<Multigraph::vertex_type>((i + 1) % k)});
    return Multigraph(k, std::move(e));
}

inline Multigraph triangle() { return cycle(3); }

inline Multigraph complete(std::size_t k)
{
    std::vector<std::array<Multigraph::vertex_type, 2>> e;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            e.push_back({static_cast<Multigraph::vertex_type>(i), static_cast<Multigraph::vertex_type>(j)});
    return Multigraph(k, std::move(e));
}

} // namespace graphs

} // namespace lers

#endif
