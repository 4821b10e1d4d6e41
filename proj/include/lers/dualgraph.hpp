#ifndef LERS_DUALGRAPH_HPP
#define LERS_DUALGRAPH_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lattice.hpp"

namespace lers
{

/// Vertex of the dual graph: a cube center or the point at infinity.
struct DualVertex
{
    bool infinity = false;
    std::size_t cube = 0;

    friend bool operator==(const DualVertex&, const DualVertex&) = default;
};

/// The 1-skeleton of the dual cell structure: one vertex per cube, one more
/// at infinity, and one edge per face crossing it. Dual edge ids coincide
/// with face ids, so the face <-> dual edge map is the identity on indices.
///
/// Cube vertex ids equal cube indices; infinity is the last vertex.
class DualGraph
{
public:
    using vertex_type = Multigraph::vertex_type;
    using edge_type = Multigraph::edge_type;

    explicit DualGraph(const CubicalComplex& cx) : num_cubes_(cx.num_cubes())
    {
        const int n = cx.n();
        const auto inf = static_cast<vertex_type>(num_cubes_);
        std::vector<std::array<vertex_type, 2>> edges(cx.num_faces());
        for (std::size_t f = 0; f < cx.num_faces(); ++f) {
            const CellId c = cx.face(f);
            const int a = static_cast<int>(c.axis);
            // The face separates the cube below it (along its normal) from the
            // cube at its anchor; either may be outside the lattice.
            vertex_type lo = inf;
            vertex_type hi = inf;
            if (c.anchor[a] >= 1) {
                Coord below = c.anchor;
                below[a] -= 1;
                lo = static_cast<vertex_type>(cx.cube_index(below));
            }
            if (c.anchor[a] <= n - 1)
                hi = static_cast<vertex_type>(cx.cube_index(c.anchor));
            if (lo == inf)
                edges[f] = {hi, lo};
            else
                edges[f] = {lo, hi};
        }
        graph_ = Multigraph(num_cubes_ + 1, std::move(edges));
    }

    const Multigraph& graph() const noexcept { return graph_; }
    std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }
    std::size_t num_edges() const noexcept { return graph_.num_edges(); }

    vertex_type infinity() const noexcept { return static_cast<vertex_type>(num_cubes_); }
    bool is_infinity(std::size_t v) const noexcept { return v == num_cubes_; }

    DualVertex describe(std::size_t v) const
    {
        if (v > num_cubes_)
            throw std::out_of_range("dual vertex " + std::to_string(v) + " out of range");
        if (v == num_cubes_)
            return {true, 0};
        return {false, v};
    }

    vertex_type vertex_of_cube(std::size_t cube) const
    {
        if (cube >= num_cubes_)
            throw std::out_of_range("cube index " + std::to_string(cube) + " out of range");
        return static_cast<vertex_type>(cube);
    }

    std::size_t cube_of_vertex(std::size_t v) const
    {
        if (v == num_cubes_)
            throw std::invalid_argument("the vertex at infinity has no cube");
        if (v > num_cubes_)
            throw std::out_of_range("dual vertex " + std::to_string(v) + " out of range");
        return v;
    }

    edge_type dual_edge_of_face(std::size_t face) const
    {
        if (face >= graph_.num_edges())
            throw std::out_of_range("face index " + std::to_string(face) + " out of range");
        return static_cast<edge_type>(face);
    }

    std::size_t dual_face_of_edge(std::size_t edge) const
    {
        if (edge >= graph_.num_edges())
            throw std::out_of_range("dual edge " + std::to_string(edge) + " out of range");
        return edge;
    }

private:
    std::size_t num_cubes_;
    Multigraph graph_;
};

inline DualGraph build_dual(const CubicalComplex& cx) { return DualGraph(cx); }

} // namespace lers

#endif
