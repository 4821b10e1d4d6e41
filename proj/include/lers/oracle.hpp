#ifndef LERS_ORACLE_HPP
#define LERS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dualgraph.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "ust.hpp"

namespace lers
{

using BigRational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr const char* kEnumerationAlgorithm = "include-exclude-v1";

/// Enumeration refused because the graph has more trees than the cap.
class EnumerationRefused : public std::runtime_error
{
public:
    explicit EnumerationRefused(BigInt count)
        : std::runtime_error("graph has " + count.str() + " spanning trees, above the cap"),
          count_(std::move(count))
    {
    }
    const BigInt& count() const noexcept { return count_; }

private:
    BigInt count_;
};

namespace detail
{

// Binary include/exclude search over edges in id order. An edge is included
// only if it joins two components; it is excluded only if the remaining
// edges can still complete a spanning tree. Every leaf is a distinct tree.
template <typename F>
class TreeEnumerator
{
public:
    TreeEnumerator(const Multigraph& g, F& emit) : g_(g), emit_(emit), uf_(g.num_vertices()) {}

    std::uint64_t run()
    {
        if (g_.num_vertices() == 0)
            return 0;
        chosen_.reserve(g_.num_vertices());
        recurse(0);
        return emitted_;
    }

private:
    void recurse(std::size_t i)
    {
        if (chosen_.size() + 1 == g_.num_vertices()) {
            ++emitted_;
            emit_(std::span<const Multigraph::edge_type>(chosen_));
            return;
        }
        if (i == g_.num_edges())
            return;

        const auto [a, b] = g_.endpoints(i);
        if (uf_.unite(a, b)) {
            chosen_.push_back(static_cast<Multigraph::edge_type>(i));
            recurse(i + 1);
            chosen_.pop_back();
            uf_.rollback();
        }
        if (completable_without(i))
            recurse(i + 1);
    }

    bool completable_without(std::size_t i)
    {
        std::size_t merged = 0;
        for (std::size_t j = i + 1; j < g_.num_edges() && uf_.components() > 1; ++j) {
            const auto [a, b] = g_.endpoints(j);
            if (uf_.unite(a, b))
                ++merged;
        }
        const bool ok = uf_.components() == 1;
        while (merged-- > 0)
            uf_.rollback();
        return ok;
    }

    const Multigraph& g_;
    F& emit_;
    UnionFind uf_;
    std::vector<Multigraph::edge_type> chosen_;
    std::uint64_t emitted_ = 0;
};

} // namespace detail

/// Calls `f(span<const edge_type>)` once for every spanning tree of g.
/// Refuses (EnumerationRefused) if the matrix-tree count exceeds `cap`.
/// Returns the number of trees visited.
template <typename F>
std::uint64_t for_each_spanning_tree(const Multigraph& g, std::uint64_t cap, F&& f)
{
    const BigInt count = count_spanning_trees(g);
    if (count > cap)
        throw EnumerationRefused(count);
    detail::TreeEnumerator<std::remove_reference_t<F>> en(g, f);
    return en.run();
}

/// All spanning trees as edge-id lists (ascending ids within each tree).
inline std::vector<std::vector<Multigraph::edge_type>> enumerate_trees(const Multigraph& g,
                                                                       std::uint64_t cap = kDefaultEnumerationCap)
{
    std::vector<std::vector<Multigraph::edge_type>> out;
    for_each_spanning_tree(g, cap, [&](std::span<const Multigraph::edge_type> t) {
        out.emplace_back(t.begin(), t.end());
    });
    return out;
}

/// Exact law of the surface size M_n: tree counts per size.
struct ExactDistribution
{
    int n = 0;
    BigInt tree_count = 0;
    std::map<std::size_t, BigInt> counts;

    BigRational probability(std::size_t size) const
    {
        auto it = counts.find(size);
        if (it == counts.end())
            return BigRational(0);
        return BigRational(it->second, tree_count);
    }

    BigRational mean() const
    {
        BigInt acc = 0;
        for (const auto& [m, c] : counts)
            acc += c * m;
        return BigRational(acc, tree_count);
    }

    std::map<std::size_t, double> probabilities() const
    {
        std::map<std::size_t, double> out;
        for (const auto& [m, c] : counts)
            out[m] = static_cast<double>(BigRational(c, tree_count));
        return out;
    }

    friend bool operator==(const ExactDistribution&, const ExactDistribution&) = default;
};

/// Enumerates every spanning tree of the dual graph, solves for the unique
/// filling of the equatorial loop in each coupled 2-tree, and tallies sizes.
inline ExactDistribution exact_mn_distribution(int n, std::uint64_t cap = kDefaultEnumerationCap)
{
    const CubicalComplex cx = build_complex(n);
    const DualGraph dual = build_dual(cx);
    const Chain1 loop = equatorial_loop(cx);

    ExactDistribution dist;
    dist.n = n;
    std::map<std::size_t, std::uint64_t> tally;
    Chain2 faces = cx.all_faces();
    const std::uint64_t trees =
        for_each_spanning_tree(dual.graph(), cap, [&](std::span<const Multigraph::edge_type> t) {
            for (auto e : t)
                faces.erase(dual.dual_face_of_edge(e));
            BoundedChain r = solve_bounded_chain(faces, loop, cx);
            if (r.status != SolveStatus::Unique)
                throw std::logic_error("enumerated tree does not couple to a 2-tree");
            ++tally[r.chain.count()];
            for (auto e : t)
                faces.insert(dual.dual_face_of_edge(e));
        });
    dist.tree_count = trees;
    for (const auto& [m, c] : tally)
        dist.counts[m] = c;
    return dist;
}

// Cache files are line-oriented text:
//   lers-exact-distribution 1
//   algorithm <name>
//   n <n>
//   cap <cap>
//   trees <count>
//   size count
//   <m> <count>   (one row per support point, ascending m)

inline void write_distribution(std::ostream& os, const ExactDistribution& d, std::uint64_t cap)
{
    os << "lers-exact-distribution 1\n"
       << "algorithm " << kEnumerationAlgorithm << "\n"
       << "n " << d.n << "\n"
       << "cap " << cap << "\n"
       << "trees " << d.tree_count.str() << "\n"
       << "size count\n";
    for (const auto& [m, c] : d.counts)
        os << m << ' ' << c.str() << '\n';
}

/// Parses a cache record. Throws std::runtime_error on a malformed or
/// version-mismatched file.
inline ExactDistribution read_distribution(std::istream& is, std::uint64_t* cap_out = nullptr)
{
    auto expect = [&](const std::string& key) {
        std::string k;
        if (!(is >> k) || k != key)
            throw std::runtime_error("distribution cache: expected '" + key + "'");
    };
    ExactDistribution d;
    std::string version, algorithm, trees;
    std::uint64_t cap = 0;
    expect("lers-exact-distribution");
    is >> version;
    if (version != "1")
        throw std::runtime_error("distribution cache: unsupported version " + version);
    expect("algorithm");
    is >> algorithm;
    if (algorithm != kEnumerationAlgorithm)
        throw std::runtime_error("distribution cache: algorithm mismatch");
    expect("n");
    is >> d.n;
    expect("cap");
    is >> cap;
    expect("trees");
    is >> trees;
    d.tree_count = BigInt(trees);
    expect("size");
    expect("count");
    std::size_t m = 0;
    std::string c;
    BigInt total = 0;
    while (is >> m >> c) {
        d.counts[m] = BigInt(c);
        total += d.counts[m];
    }
    if (!is.eof())
        throw std::runtime_error("distribution cache: malformed row");
    if (total != d.tree_count)
        throw std::runtime_error("distribution cache: counts do not sum to tree count");
    if (cap_out != nullptr)
        *cap_out = cap;
    return d;
}

/// LERS_CACHE_DIR if set, otherwise ./.lers-cache.
inline std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("LERS_CACHE_DIR"); env != nullptr && *env != '\0')
        return env;
    return ".lers-cache";
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, int n, std::uint64_t cap)
{
    std::ostringstream name;
    name << "exact-mn-n" << n << "-cap" << cap << '-' << kEnumerationAlgorithm << ".txt";
    return dir / name.str();
}

/// exact_mn_distribution with an on-disk cache keyed by (n, cap, algorithm).
inline ExactDistribution cached_exact_mn_distribution(int n, std::uint64_t cap = kDefaultEnumerationCap,
                                                      const std::filesystem::path& dir = default_cache_dir())
{
    const auto path = cache_path(dir, n, cap);
    if (std::ifstream in(path); in) {
        try {
            ExactDistribution d = read_distribution(in);
            if (d.n == n)
                return d;
        } catch (const std::runtime_error&) {
            // stale or corrupt; recompute below
        }
    }
    ExactDistribution d = exact_mn_distribution(n, cap);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (out)
            write_distribution(out, d, cap);
    }
    std::filesystem::rename(tmp, path, ec);
    return d;
}

} // namespace lers

#endif
