#ifndef LERS_LATTICE_HPP
#define LERS_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chain.hpp"

namespace lers
{

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

using Coord = std::array<int, 3>;

/// Number of unit cubes along each side of the lattice.
class LatticeSize
{
public:
    explicit LatticeSize(int n) : n_(n)
    {
        if (n < 1)
            throw std::invalid_argument("lattice size must be >= 1, got " + std::to_string(n));
    }
    int value() const noexcept { return n_; }

private:
    int n_;
};

/// A cell of the lattice. `axis` is the direction of an edge or the normal
/// of a face and is meaningless for vertices and cubes. `anchor` is the
/// lowest-coordinate corner.
struct CellId
{
    int dim = 0;
    Axis axis = Axis::X;
    Coord anchor{};
    std::size_t index = 0;

    friend bool operator==(const CellId&, const CellId&) = default;
};

/// The 2-skeleton of the unit-cube subdivision of [0,n]^3 together with its
/// cubes. Vertices have coordinates 0..n in each axis, so there are exactly
/// n^3 cubes.
///
/// Indices are dense per dimension: axis-major, then lexicographic in the
/// anchor (x slowest, z fastest). Immutable after construction.
class CubicalComplex
{
public:
    using id_type = std::uint32_t;

    explicit CubicalComplex(LatticeSize size) : n_(size.value())
    {
        const std::size_t m = static_cast<std::size_t>(n_);
        if ((m + 1) * (m + 1) * m * 3 > 0xffffffffULL)
            throw std::invalid_argument("lattice too large for 32-bit cell ids");

        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                edge_ext_[a][b] = (a == b) ? n_ : n_ + 1;
                face_ext_[a][b] = (a == b) ? n_ + 1 : n_;
            }
        }
        edges_per_axis_ = m * (m + 1) * (m + 1);
        faces_per_axis_ = (m + 1) * m * m;

        edge_vertices_.resize(2 * num_edges());
        for (std::size_t e = 0; e < num_edges(); ++e) {
            CellId c = edge(e);
            Coord q = c.anchor;
            q[static_cast<int>(c.axis)] += 1;
            edge_vertices_[2 * e] = static_cast<id_type>(vertex_index(c.anchor));
            edge_vertices_[2 * e + 1] = static_cast<id_type>(vertex_index(q));
        }

        face_edges_.resize(4 * num_faces());
        for (std::size_t f = 0; f < num_faces(); ++f) {
            CellId c = face(f);
            const int a = static_cast<int>(c.axis);
            const int u = (a + 1) % 3;
            const int v = (a + 2) % 3;
            Coord pu = c.anchor;
            pu[u] += 1;
            Coord pv = c.anchor;
            pv[v] += 1;
            face_edges_[4 * f + 0] = static_cast<id_type>(edge_index(Axis(u), c.anchor));
            face_edges_[4 * f + 1] = static_cast<id_type>(edge_index(Axis(u), pv));
            face_edges_[4 * f + 2] = static_cast<id_type>(edge_index(Axis(v), c.anchor));
            face_edges_[4 * f + 3] = static_cast<id_type>(edge_index(Axis(v), pu));
        }

        cube_faces_.resize(6 * num_cubes());
        for (std::size_t k = 0; k < num_cubes(); ++k) {
            Coord p = cube(k).anchor;
            for (int a = 0; a < 3; ++a) {
                Coord q = p;
                q[a] += 1;
                cube_faces_[6 * k + 2 * a] = static_cast<id_type>(face_index(Axis(a), p));
                cube_faces_[6 * k + 2 * a + 1] = static_cast<id_type>(face_index(Axis(a), q));
            }
        }
    }

    int n() const noexcept { return n_; }

    std::size_t num_vertices() const noexcept
    {
        const std::size_t m = static_cast<std::size_t>(n_) + 1;
        return m * m * m;
    }
    std::size_t num_edges() const noexcept { return 3 * edges_per_axis_; }
    std::size_t num_faces() const noexcept { return 3 * faces_per_axis_; }
    std::size_t num_cubes() const noexcept
    {
        const std::size_t m = static_cast<std::size_t>(n_);
        return m * m * m;
    }

    std::size_t count(int dim) const
    {
        switch (dim) {
        case 0: return num_vertices();
        case 1: return num_edges();
        case 2: return num_faces();
        case 3: return num_cubes();
        default: throw std::invalid_argument("cell dimension must be 0..3");
        }
    }

    /// Faces in a 2-tree: every face except one per cube.
    std::size_t two_tree_face_count() const noexcept { return num_faces() - num_cubes(); }

    std::size_t vertex_index(const Coord& p) const
    {
        const std::array<int, 3> ext{n_ + 1, n_ + 1, n_ + 1};
        return lex(p, ext, "vertex");
    }

    std::size_t edge_index(Axis axis, const Coord& p) const
    {
        const int a = static_cast<int>(axis);
        return a * edges_per_axis_ + lex(p, edge_ext_[a], "edge");
    }

    std::size_t face_index(Axis normal, const Coord& p) const
    {
        const int a = static_cast<int>(normal);
        return a * faces_per_axis_ + lex(p, face_ext_[a], "face");
    }

    std::size_t cube_index(const Coord& p) const
    {
        const std::array<int, 3> ext{n_, n_, n_};
        return lex(p, ext, "cube");
    }

    CellId vertex(std::size_t i) const
    {
        bounds(i, num_vertices(), "vertex");
        return {0, Axis::X, unlex(i, {n_ + 1, n_ + 1, n_ + 1}), i};
    }

    CellId edge(std::size_t i) const
    {
        bounds(i, num_edges(), "edge");
        const auto a = static_cast<int>(i / edges_per_axis_);
        return {1, Axis(a), unlex(i % edges_per_axis_, edge_ext_[a]), i};
    }

    CellId face(std::size_t i) const
    {
        bounds(i, num_faces(), "face");
        const auto a = static_cast<int>(i / faces_per_axis_);
        return {2, Axis(a), unlex(i % faces_per_axis_, face_ext_[a]), i};
    }

    CellId cube(std::size_t i) const
    {
        bounds(i, num_cubes(), "cube");
        return {3, Axis::X, unlex(i, {n_, n_, n_}), i};
    }

    CellId cell(int dim, std::size_t i) const
    {
        switch (dim) {
        case 0: return vertex(i);
        case 1: return edge(i);
        case 2: return face(i);
        case 3: return cube(i);
        default: throw std::invalid_argument("cell dimension must be 0..3");
        }
    }

    /// The 2 endpoints of an edge, lower anchor first.
    std::array<id_type, 2> edge_vertices(std::size_t e) const
    {
        bounds(e, num_edges(), "edge");
        return {edge_vertices_[2 * e], edge_vertices_[2 * e + 1]};
    }

    /// The 4 boundary edges of a face.
    std::array<id_type, 4> face_edges(std::size_t f) const
    {
        bounds(f, num_faces(), "face");
        const id_type* p = &face_edges_[4 * f];
        return {p[0], p[1], p[2], p[3]};
    }

    /// The 6 boundary faces of a cube, ordered (x-low, x-high, y-low, ...).
    std::array<id_type, 6> cube_faces(std::size_t c) const
    {
        bounds(c, num_cubes(), "cube");
        const id_type* p = &cube_faces_[6 * c];
        return {p[0], p[1], p[2], p[3], p[4], p[5]};
    }

    const id_type* cube_faces_data(std::size_t c) const noexcept { return &cube_faces_[6 * c]; }

    Chain0 empty_chain0() const { return Chain0(num_vertices()); }
    Chain1 empty_chain1() const { return Chain1(num_edges()); }
    Chain2 empty_chain2() const { return Chain2(num_faces()); }
    Chain2 all_faces() const { return empty_chain2().complement(); }

    Chain1 boundary(const Chain2& c) const
    {
        if (c.capacity() != num_faces())
            throw std::invalid_argument("2-chain does not belong to this complex");
        Chain1 out = empty_chain1();
        c.for_each([&](std::size_t f) {
            for (int k = 0; k < 4; ++k)
                out.flip_unchecked(face_edges_[4 * f + k]);
        });
        return out;
    }

    Chain0 boundary(const Chain1& c) const
    {
        if (c.capacity() != num_edges())
            throw std::invalid_argument("1-chain does not belong to this complex");
        Chain0 out = empty_chain0();
        c.for_each([&](std::size_t e) {
            out.flip_unchecked(edge_vertices_[2 * e]);
            out.flip_unchecked(edge_vertices_[2 * e + 1]);
        });
        return out;
    }

    /// The closed surface of one cube as a 2-chain.
    Chain2 cube_boundary(std::size_t c) const
    {
        Chain2 out = empty_chain2();
        for (auto f : cube_faces(c))
            out.flip_unchecked(f);
        return out;
    }

    /// Height of the equatorial plane.
    int equator_height() const noexcept { return n_ / 2; }

private:
    std::size_t lex(const Coord& p, const std::array<int, 3>& ext, const char* what) const
    {
        for (int a = 0; a < 3; ++a)
            if (p[a] < 0 || p[a] >= ext[a])
                throw std::out_of_range(std::string(what) + " anchor out of range");
        return (static_cast<std::size_t>(p[0]) * ext[1] + p[1]) * ext[2] + p[2];
    }

    static Coord unlex(std::size_t i, const std::array<int, 3>& ext)
    {
        Coord p{};
        p[2] = static_cast<int>(i % ext[2]);
        i /= ext[2];
        p[1] = static_cast<int>(i % ext[1]);
        p[0] = static_cast<int>(i / ext[1]);
        return p;
    }

    static void bounds(std::size_t i, std::size_t n, const char* what)
    {
        if (i >= n)
            throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                    " out of range (" + std::to_string(n) + ")");
    }

    int n_;
    std::size_t edges_per_axis_ = 0;
    std::size_t faces_per_axis_ = 0;
    std::array<std::array<int, 3>, 3> edge_ext_{};
    std::array<std::array<int, 3>, 3> face_ext_{};
    std::vector<id_type> edge_vertices_;
    std::vector<id_type> face_edges_;
    std::vector<id_type> cube_faces_;
};

inline CubicalComplex build_complex(int n) { return CubicalComplex(LatticeSize(n)); }

/// GF(2) boundary of a 2-chain.
inline Chain1 boundary_2(const CubicalComplex& cx, const Chain2& c) { return cx.boundary(c); }

/// GF(2) boundary of a 1-chain.
inline Chain0 boundary_1(const CubicalComplex& cx, const Chain1& c) { return cx.boundary(c); }

/// Perimeter of the square [0,n]^2 at height floor(n/2): 4n edges.
inline Chain1 equatorial_loop(const CubicalComplex& cx)
{
    const int n = cx.n();
    const int h = cx.equator_height();
    Chain1 loop = cx.empty_chain1();
    for (int t = 0; t < n; ++t) {
        loop.insert(cx.edge_index(Axis::X, {t, 0, h}));
        loop.insert(cx.edge_index(Axis::X, {t, n, h}));
        loop.insert(cx.edge_index(Axis::Y, {0, t, h}));
        loop.insert(cx.edge_index(Axis::Y, {n, t, h}));
    }
    return loop;
}

/// The n^2 Z-normal squares filling the equatorial loop.
inline Chain2 initial_surface(const CubicalComplex& cx)
{
    const int n = cx.n();
    const int h = cx.equator_height();
    Chain2 s = cx.empty_chain2();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.insert(cx.face_index(Axis::Z, {x, y, h}));
    return s;
}

/// A second filling of the equatorial loop: the flat square one level up,
/// closed off by the band of side faces between the two levels.
inline Chain2 shifted_initial_surface(const CubicalComplex& cx)
{
    const int n = cx.n();
    const int h = cx.equator_height();
    Chain2 s = cx.empty_chain2();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.insert(cx.face_index(Axis::Z, {x, y, h + 1}));
    for (int t = 0; t < n; ++t) {
        s.insert(cx.face_index(Axis::X, {0, t, h}));
        s.insert(cx.face_index(Axis::X, {n, t, h}));
        s.insert(cx.face_index(Axis::Y, {t, 0, h}));
        s.insert(cx.face_index(Axis::Y, {t, n, h}));
    }
    return s;
}

} // namespace lers

#endif
