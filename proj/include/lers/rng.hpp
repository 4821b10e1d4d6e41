#ifndef LERS_RNG_HPP
#define LERS_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lers
{

/// SplitMix64 finalizer. Used only to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Child seed for (master, keys...). Order of keys matters; the result does
/// not depend on the order in which children are requested, so sweeps can be
/// scheduled freely.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> keys) noexcept
{
    std::uint64_t h = mix64(master);
    for (auto k : keys)
        h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
    return h;
}

/// Seedable stream with platform-independent draws.
///
/// std::mt19937_64 has a fully specified output sequence; the standard
/// distributions do not, so bounded integers and unit doubles are produced
/// here directly from raw engine output.
class RngStream
{
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    RngStream child(std::initializer_list<std::uint64_t> keys) const
    {
        return RngStream(derive_seed(seed_, keys));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t bounded(std::uint64_t bound)
    {
        // Lemire's multiply-shift with rejection: exact and deterministic.
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace lers

#endif
