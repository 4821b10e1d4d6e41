#ifndef LERS_HOMOLOGY_HPP
#define LERS_HOMOLOGY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "graph.hpp"
#include "lattice.hpp"

namespace lers
{

/// Dense matrix over GF(2), rows bit-packed.
class Gf2Matrix
{
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0)
    {
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        check(r, c);
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
    }

    void set(std::size_t r, std::size_t c, bool value = true)
    {
        check(r, c);
        auto& w = data_[r * stride_ + (c >> 6)];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        w = value ? (w | bit) : (w & ~bit);
    }

    void flip(std::size_t r, std::size_t c)
    {
        check(r, c);
        data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    const std::uint64_t* row(std::size_t r) const noexcept { return data_.data() + r * stride_; }

private:
    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("Gf2Matrix index out of range");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Incremental row-echelon basis of a subspace of GF(2)^width. Each stored
/// vector is keyed by its lowest set bit. Optionally tracks, for every stored
/// vector, which inserted generators it is the sum of.
class Gf2Basis
{
public:
    Gf2Basis(std::size_t width, std::size_t tag_width = 0)
        : width_(width),
          words_((width + 63) / 64),
          tag_words_((tag_width + 63) / 64),
          pivot_(width, -1)
    {
    }

    std::size_t rank() const noexcept { return count_; }

    /// Reduces `v` (and its tag) in place against the basis; returns true if
    /// the remainder is zero.
    bool reduce(std::uint64_t* v, std::uint64_t* tag) const
    {
        std::size_t k = 0;
        while (true) {
            while (k < words_ && v[k] == 0)
                ++k;
            if (k == words_)
                return true;
            const std::size_t bit = (k << 6) + static_cast<std::size_t>(std::countr_zero(v[k]));
            const long p = pivot_[bit];
            if (p < 0)
                return false;
            const std::uint64_t* b = &vecs_[static_cast<std::size_t>(p) * words_];
            for (std::size_t j = k; j < words_; ++j)
                v[j] ^= b[j];
            if (tag != nullptr) {
                const std::uint64_t* t = &tags_[static_cast<std::size_t>(p) * tag_words_];
                for (std::size_t j = 0; j < tag_words_; ++j)
                    tag[j] ^= t[j];
            }
        }
    }

    /// Adds `v` to the basis if independent. Returns true iff the rank grew.
    /// On false, `tag` holds a nonzero combination of generators summing to 0.
    bool insert(std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& tag)
    {
        if (v.size() != words_ || (tag_words_ != 0 && tag.size() != tag_words_))
            throw std::invalid_argument("Gf2Basis: vector width mismatch");
        if (reduce(v.data(), tag_words_ != 0 ? tag.data() : nullptr))
            return false;
        std::size_t k = 0;
        while (v[k] == 0)
            ++k;
        const std::size_t bit = (k << 6) + static_cast<std::size_t>(std::countr_zero(v[k]));
        pivot_[bit] = static_cast<long>(count_);
        vecs_.insert(vecs_.end(), v.begin(), v.end());
        if (tag_words_ != 0)
            tags_.insert(tags_.end(), tag.begin(), tag.end());
        ++count_;
        return true;
    }

    bool insert(std::vector<std::uint64_t>& v)
    {
        std::vector<std::uint64_t> none;
        if (tag_words_ != 0)
            none.assign(tag_words_, 0);
        return insert(v, none);
    }

    std::size_t words() const noexcept { return words_; }
    std::size_t tag_words() const noexcept { return tag_words_; }

private:
    std::size_t width_;
    std::size_t words_;
    std::size_t tag_words_;
    std::vector<long> pivot_;
    std::vector<std::uint64_t> vecs_;
    std::vector<std::uint64_t> tags_;
    std::size_t count_ = 0;
};

/// Rank over GF(2).
inline std::size_t gf2_rank(const Gf2Matrix& m)
{
    Gf2Basis basis(m.cols());
    std::vector<std::uint64_t> v(m.stride());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        v.assign(m.row(r), m.row(r) + m.stride());
        basis.insert(v);
    }
    return basis.rank();
}

/// Boundary matrix of dimension k (1 or 2): rows are (k-1)-cells, columns k-cells.
inline Gf2Matrix boundary_matrix(const CubicalComplex& cx, int k)
{
    if (k == 1) {
        Gf2Matrix m(cx.num_vertices(), cx.num_edges());
        for (std::size_t e = 0; e < cx.num_edges(); ++e)
            for (auto v : cx.edge_vertices(e))
                m.flip(v, e);
        return m;
    }
    if (k == 2) {
        Gf2Matrix m(cx.num_edges(), cx.num_faces());
        for (std::size_t f = 0; f < cx.num_faces(); ++f)
            for (auto e : cx.face_edges(f))
                m.flip(e, f);
        return m;
    }
    throw std::invalid_argument("boundary_matrix: k must be 1 or 2");
}

struct BettiReport
{
    std::size_t b0 = 0;
    std::size_t b1 = 0;
    std::size_t b2 = 0;

    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

namespace detail
{

inline std::vector<std::uint64_t> face_boundary_words(const CubicalComplex& cx, std::size_t f)
{
    std::vector<std::uint64_t> v((cx.num_edges() + 63) / 64, 0);
    for (auto e : cx.face_edges(f))
        v[e >> 6] ^= std::uint64_t{1} << (e & 63);
    return v;
}

inline void check_faces(const CubicalComplex& cx, const Chain2& faces)
{
    if (faces.capacity() != cx.num_faces())
        throw std::invalid_argument("2-chain does not belong to this complex");
}

} // namespace detail

/// GF(2) rank of the boundary map restricted to the given faces.
inline std::size_t boundary_rank(const CubicalComplex& cx, const Chain2& faces)
{
    detail::check_faces(cx, faces);
    Gf2Basis basis(cx.num_edges());
    faces.for_each([&](std::size_t f) {
        auto v = detail::face_boundary_words(cx, f);
        basis.insert(v);
    });
    return basis.rank();
}

/// Betti numbers of the subcomplex made of the full 1-skeleton plus `faces`.
inline BettiReport betti(const Chain2& faces, const CubicalComplex& cx)
{
    UnionFind uf(cx.num_vertices());
    for (std::size_t e = 0; e < cx.num_edges(); ++e) {
        const auto [a, b] = cx.edge_vertices(e);
        uf.unite(a, b);
    }
    const std::size_t b0 = uf.components();
    const std::size_t rank1 = cx.num_vertices() - b0;
    const std::size_t cycles1 = cx.num_edges() - rank1;
    const std::size_t rank2 = boundary_rank(cx, faces);
    return {b0, cycles1 - rank2, faces.count() - rank2};
}

/// A 2-tree of Q_n: acyclic over GF(2) with exactly |faces| - n^3 faces.
inline bool verify_2tree(const Chain2& faces, const CubicalComplex& cx)
{
    if (faces.count() != cx.two_tree_face_count())
        return false;
    const BettiReport r = betti(faces, cx);
    return r.b1 == 0 && r.b2 == 0;
}

enum class SolveStatus : std::uint8_t { Unique, NonUnique, NoSolution };

struct BoundedChain
{
    SolveStatus status = SolveStatus::NoSolution;
    Chain2 chain;              ///< a solution (free variables zero); empty on NoSolution
    std::size_t kernel_dim = 0; ///< number of independent 2-cycles among the faces
};

/// Solves boundary(x) = loop for x supported on `faces`. The solution is
/// unique exactly when the faces carry no 2-cycle.
inline BoundedChain solve_bounded_chain(const Chain2& faces, const Chain1& loop,
                                        const CubicalComplex& cx)
{
    detail::check_faces(cx, faces);
    if (loop.capacity() != cx.num_edges())
        throw std::invalid_argument("1-chain does not belong to this complex");

    const std::vector<std::size_t> support = faces.indices();
    Gf2Basis basis(cx.num_edges(), support.size());
    std::vector<std::uint64_t> tag(basis.tag_words());
    std::size_t kernel = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
        auto v = detail::face_boundary_words(cx, support[i]);
        std::fill(tag.begin(), tag.end(), 0);
        tag[i >> 6] |= std::uint64_t{1} << (i & 63);
        if (!basis.insert(v, tag))
            ++kernel;
    }

    BoundedChain out;
    out.kernel_dim = kernel;
    std::vector<std::uint64_t> rhs = loop.words();
    std::fill(tag.begin(), tag.end(), 0);
    if (!basis.reduce(rhs.data(), tag.empty() ? nullptr : tag.data())) {
        out.status = SolveStatus::NoSolution;
        out.chain = cx.empty_chain2();
        return out;
    }
    out.chain = cx.empty_chain2();
    for (std::size_t i = 0; i < support.size(); ++i)
        if ((tag[i >> 6] >> (i & 63)) & 1U)
            out.chain.insert(support[i]);
    out.status = kernel == 0 ? SolveStatus::Unique : SolveStatus::NonUnique;
    return out;
}

} // namespace lers

#endif
