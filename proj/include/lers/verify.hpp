#ifndef LERS_VERIFY_HPP
#define LERS_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dualgraph.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "stats.hpp"
#include "surface.hpp"
#include "sweep.hpp"

namespace lers
{

/// Outcome of the full invariant suite on one sample.
struct SampleCheck
{
    std::size_t size = 0;
    std::uint64_t steps = 0;
    bool tree_valid = false;       ///< dual tree spans with |V|-1 edges
    bool two_tree = false;         ///< b1 = b2 = 0 and the right face count
    bool boundary = false;         ///< boundary(surface) is the equatorial loop
    bool inside_two_tree = false;  ///< surface avoids all faces crossed by the tree
    bool linear_match = false;     ///< incremental surface equals the linear solve
    bool independent = false;      ///< same result from the shifted starting surface
    bool size_bounds = false;
    std::string error;             ///< sampler or invariant exception text

    bool ok() const noexcept
    {
        return error.empty() && tree_valid && two_tree && boundary && inside_two_tree &&
               linear_match && independent && size_bounds;
    }
};

/// Samples once from `seed` and checks every structural invariant.
inline SampleCheck check_sample(const CubicalComplex& cx, const DualGraph& dual, std::uint64_t seed,
                                bool inject_fault = false)
{
    SampleCheck c;
    try {
        const Chain1 loop = equatorial_loop(cx);
        LersOptions opts;
        opts.check_invariants = !inject_fault;
        opts.skip_update = inject_fault ? 0 : -1;
        RngStream rng(seed);
        const LersSample s = sample_lers(cx, dual, rng, opts);
        c.size = s.size;
        c.steps = s.steps;
        c.tree_valid = is_spanning_tree(dual.graph(), s.tree.edges);
        const Chain2 faces = two_tree_faces(s.tree, cx);
        c.two_tree = verify_2tree(faces, cx);
        c.boundary = cx.boundary(s.surface) == loop;
        c.inside_two_tree = s.surface.subset_of(faces);
        const BoundedChain solved = solve_bounded_chain(faces, loop, cx);
        c.linear_match = solved.status == SolveStatus::Unique && solved.chain == s.surface;

        RngStream again(seed);
        LersOptions shifted = opts;
        shifted.check_invariants = false;
        shifted.initial = shifted_initial_surface(cx);
        c.independent = sample_lers(cx, dual, again, shifted).surface == s.surface;
        c.size_bounds = size_within_bounds(cx.n(), s.size);
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

struct VerifyReport
{
    int n = 0;
    std::uint64_t reps = 0;
    std::uint64_t violations = 0;
    std::map<std::string, std::uint64_t> failures_by_check;
    std::map<std::size_t, std::uint64_t> histogram;
    std::vector<std::string> distribution_checks; ///< human-readable lines
    bool distribution_ok = true;

    bool ok() const noexcept { return violations == 0 && distribution_ok; }
};

/// Runs `reps` fully checked samples at size n (seeds derived as in a sweep)
/// and, for n <= 2, compares the size histogram with the exact law.
inline VerifyReport verify_run(int n, std::uint64_t reps, std::uint64_t master_seed,
                               bool inject_fault = false, double alpha = 0.01)
{
    const CubicalComplex cx = build_complex(n);
    const DualGraph dual = build_dual(cx);
    VerifyReport rep;
    rep.n = n;
    rep.reps = reps;
    for (std::uint64_t r = 0; r < reps; ++r) {
        const SampleCheck c = check_sample(cx, dual, sample_seed(master_seed, n, r), inject_fault);
        ++rep.histogram[c.size];
        if (c.ok())
            continue;
        ++rep.violations;
        auto bump = [&](bool good, const char* name) {
            if (!good)
                ++rep.failures_by_check[name];
        };
        if (!c.error.empty())
            ++rep.failures_by_check["exception: " + c.error];
        else {
            bump(c.tree_valid, "spanning tree");
            bump(c.two_tree, "2-tree");
            bump(c.boundary, "boundary");
            bump(c.inside_two_tree, "inside 2-tree");
            bump(c.linear_match, "linear solve");
            bump(c.independent, "initial-surface independence");
            bump(c.size_bounds, "size bounds");
        }
    }

    if (n == 1) {
        const std::uint64_t ones = rep.histogram.count(1) ? rep.histogram.at(1) : 0;
        const std::uint64_t fives = rep.histogram.count(5) ? rep.histogram.at(5) : 0;
        const bool p1 = binomial_within(ones, reps, 5.0 / 6.0, alpha);
        const bool p5 = binomial_within(fives, reps, 1.0 / 6.0, alpha);
        rep.distribution_ok = p1 && p5 && ones + fives == reps;
        rep.distribution_checks.push_back("P(M=1) = " + std::to_string(double(ones) / double(reps)) +
                                          " vs 5/6: " + (p1 ? "ok" : "FAIL"));
        rep.distribution_checks.push_back("P(M=5) = " + std::to_string(double(fives) / double(reps)) +
                                          " vs 1/6: " + (p5 ? "ok" : "FAIL"));
    } else if (n == 2) {
        const ExactDistribution exact = cached_exact_mn_distribution(2);
        const auto law = exact.probabilities();
        std::vector<std::uint64_t> obs;
        std::vector<double> probs;
        std::uint64_t outside = 0;
        for (const auto& [m, c] : rep.histogram)
            if (!law.count(m))
                outside += c;
        for (const auto& [m, p] : law) {
            obs.push_back(rep.histogram.count(m) ? rep.histogram.at(m) : 0);
            probs.push_back(p);
        }
        const GofResult g = chi_square_gof(obs, probs, alpha);
        const double tv = total_variation(rep.histogram, law);
        rep.distribution_ok = g.pass && outside == 0;
        rep.distribution_checks.push_back("chi-square " + std::to_string(g.statistic) + " <= " +
                                          std::to_string(g.critical) + ": " + (g.pass ? "ok" : "FAIL"));
        rep.distribution_checks.push_back("total variation to exact law: " + std::to_string(tv));
    }
    return rep;
}

} // namespace lers

#endif
