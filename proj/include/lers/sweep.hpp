#ifndef LERS_SWEEP_HPP
#define LERS_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dualgraph.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "rng.hpp"
#include "surface.hpp"

namespace lers
{

struct SweepConfig
{
    int n_min = 5;
    int n_max = 5;
    int n_step = 1;
    std::uint64_t reps = 1;
    std::uint64_t master_seed = 0;
    unsigned parallel = 1;
    WalkLimits limits{};

    std::vector<int> sizes() const
    {
        validate();
        std::vector<int> out;
        for (int n = n_min; n <= n_max; n += n_step)
            out.push_back(n);
        return out;
    }

    void validate() const
    {
        if (n_min < 1)
            throw std::invalid_argument("n_min must be >= 1");
        if (n_max < n_min)
            throw std::invalid_argument("n_max must be >= n_min");
        if (n_step < 1)
            throw std::invalid_argument("n_step must be >= 1");
        if (reps < 1)
            throw std::invalid_argument("reps must be >= 1");
    }
};

/// Per-sample stream seed; a pure function of (master, n, replicate).
inline std::uint64_t sample_seed(std::uint64_t master, int n, std::uint64_t replicate)
{
    return derive_seed(master, {static_cast<std::uint64_t>(n), replicate});
}

/// Runs every (n, replicate) sample on a pool of `parallel` workers and
/// returns rows ordered by (n, replicate). A sampler abort marks its row
/// with status "abort" and the sweep continues.
inline std::vector<SampleRecord> run_sweep(const SweepConfig& cfg,
                                           const std::function<void(const SampleRecord&)>& progress = {})
{
    const std::vector<int> ns = cfg.sizes();

    struct Lattice
    {
        CubicalComplex cx;
        DualGraph dual;
    };
    std::map<int, std::unique_ptr<Lattice>> lattices;
    for (int n : ns) {
        CubicalComplex cx = build_complex(n);
        DualGraph dual = build_dual(cx);
        lattices.emplace(n, std::make_unique<Lattice>(Lattice{std::move(cx), std::move(dual)}));
    }

    const std::size_t total = ns.size() * cfg.reps;
    std::vector<SampleRecord> rows(total);
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total)
                return;
            SampleRecord& r = rows[task];
            r.n = ns[task / cfg.reps];
            r.replicate = task % cfg.reps;
            r.seed = sample_seed(cfg.master_seed, r.n, r.replicate);
            const Lattice& lat = *lattices.at(r.n);
            try {
                RngStream rng(r.seed);
                LersOptions opts;
                opts.limits = cfg.limits;
                const LersSample s = sample_lers(lat.cx, lat.dual, rng, opts);
                r.size = s.size;
                r.steps = s.steps;
                r.status = "ok";
            } catch (const SamplerAbort&) {
                r.size = 0;
                r.steps = 0;
                r.status = "abort";
            } catch (...) {
                std::lock_guard lock(progress_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(total);
                return;
            }
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(r);
            }
        }
    };

    const unsigned width = std::max(1U, cfg.parallel);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < width; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

} // namespace lers

#endif
