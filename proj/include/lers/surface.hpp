#ifndef LERS_SURFACE_HPP
#define LERS_SURFACE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "chain.hpp"
#include "dualgraph.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "rng.hpp"
#include "ust.hpp"

namespace lers
{

/// Raised in checking mode when the incremental surface breaks an invariant,
/// or when a supposed 2-tree does not bound the loop uniquely.
class InvariantViolation : public std::runtime_error
{
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

struct LersOptions
{
    WalkLimits limits{};
    /// Starting surface; defaults to initial_surface(). Any 2-chain whose
    /// boundary is the equatorial loop gives the same result.
    std::optional<Chain2> initial;
    /// Check boundary and disjointness after every tree edge (slow).
    bool check_invariants = false;
    /// Test hook: skip the k-th surface update (0-based). Negative disables.
    long skip_update = -1;
};

/// One draw of the loop-erased random surface.
struct LersSample
{
    int n = 0;
    std::uint64_t seed = 0;
    Chain2 surface;
    std::size_t size = 0;      ///< number of faces, M
    std::uint64_t steps = 0;   ///< walk length of the covering walk
    std::size_t updates = 0;   ///< number of cube flips applied
    SpanningTree tree;         ///< the dual spanning tree the walk produced
};

/// Current surface plus bookkeeping for the incremental update.
class SurfaceState
{
public:
    SurfaceState(const CubicalComplex& cx, Chain2 surface) : cx_(&cx), surface_(std::move(surface))
    {
        if (surface_.capacity() != cx.num_faces())
            throw std::invalid_argument("initial surface does not belong to this complex");
    }

    /// New dual tree edge `face` reaching cube `cube`: if the edge crosses
    /// the surface, add the boundary of that cube (mod 2), which removes the
    /// crossed face and keeps the boundary unchanged.
    bool on_tree_edge(std::size_t face, std::size_t cube)
    {
        if (!surface_.test_unchecked(face))
            return false;
        const auto* faces = cx_->cube_faces_data(cube);
        for (int k = 0; k < 6; ++k)
            surface_.flip_unchecked(faces[k]);
        ++updates_;
        return true;
    }

    const Chain2& surface() const noexcept { return surface_; }
    Chain2& surface() noexcept { return surface_; }
    std::size_t updates() const noexcept { return updates_; }

private:
    const CubicalComplex* cx_;
    Chain2 surface_;
    std::size_t updates_ = 0;
};

/// Runs Aldous-Broder on the dual graph from infinity and maintains a surface
/// bounded by the equatorial loop that avoids every face crossed by the tree
/// so far. The final surface is the unique filling inside the 2-tree.
inline LersSample sample_lers(const CubicalComplex& cx, const DualGraph& dual, RngStream& rng,
                              const LersOptions& opts = {})
{
    const std::uint64_t seed = rng.seed();
    SurfaceState state(cx, opts.initial ? *opts.initial : initial_surface(cx));

    std::optional<Chain1> loop;
    if (opts.check_invariants) {
        loop = equatorial_loop(cx);
        if (cx.boundary(state.surface()) != *loop)
            throw std::invalid_argument("initial surface is not bounded by the equatorial loop");
    }

    long skip = opts.skip_update;
    auto visit = [&](const StepEvent& ev) {
        if (ev.kind != StepKind::TreeEdgeAdded)
            return;
        if (skip >= 0 && state.surface().test_unchecked(ev.edge)) {
            if (skip-- == 0)
                return;
        }
        state.on_tree_edge(ev.edge, ev.to);
        if (opts.check_invariants) {
            if (state.surface().test_unchecked(ev.edge))
                throw InvariantViolation("surface still contains the face of tree edge " +
                                         std::to_string(ev.edge));
            if (cx.boundary(state.surface()) != *loop)
                throw InvariantViolation("surface boundary drifted from the equatorial loop");
        }
    };

    LersSample out;
    out.tree = aldous_broder(dual.graph(), dual.infinity(), rng, visit, opts.limits);
    out.n = cx.n();
    out.seed = seed;
    out.steps = out.tree.steps;
    out.updates = state.updates();
    out.surface = std::move(state.surface());
    out.size = out.surface.count();
    return out;
}

/// The 2-tree coupled to a dual spanning tree: every face not crossed by it.
inline Chain2 two_tree_faces(const SpanningTree& tree, const CubicalComplex& cx)
{
    Chain2 faces = cx.all_faces();
    for (auto e : tree.edges)
        faces.erase(e);
    return faces;
}

/// The unique filling of `loop` inside `two_tree`, by linear solve.
inline Chain2 extract_surface_linear(const Chain2& two_tree, const Chain1& loop,
                                     const CubicalComplex& cx)
{
    BoundedChain r = solve_bounded_chain(two_tree, loop, cx);
    switch (r.status) {
    case SolveStatus::Unique:
        return std::move(r.chain);
    case SolveStatus::NonUnique:
        throw InvariantViolation("faces carry " + std::to_string(r.kernel_dim) +
                                 " independent 2-cycles; not a 2-tree");
    case SolveStatus::NoSolution:
    default:
        throw InvariantViolation("loop does not bound inside the given faces; not a 2-tree");
    }
}

/// Runs the sampler twice on the same stream seed, once from the flat
/// initial surface and once from the shifted one, and compares the results.
inline bool surface_independence_check(const CubicalComplex& cx, const DualGraph& dual,
                                       std::uint64_t seed)
{
    RngStream a(seed);
    RngStream b(seed);
    LersOptions flat;
    LersOptions shifted;
    shifted.initial = shifted_initial_surface(cx);
    return sample_lers(cx, dual, a, flat).surface == sample_lers(cx, dual, b, shifted).surface;
}

} // namespace lers

#endif
