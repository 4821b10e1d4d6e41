#ifndef LERS_STATS_HPP
#define LERS_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "rng.hpp"

namespace lers
{

/// Observed surface sizes grouped by lattice size n.
class SizeTable
{
public:
    void add(int n, double size)
    {
        if (n < 1)
            throw std::invalid_argument("lattice size must be >= 1");
        if (!(size > 0.0))
            throw std::invalid_argument("surface sizes must be positive");
        rows_[n].push_back(size);
    }

    const std::map<int, std::vector<double>>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    std::size_t distinct_n() const noexcept { return rows_.size(); }

    std::size_t replicates(int n) const
    {
        auto it = rows_.find(n);
        return it == rows_.end() ? 0 : it->second.size();
    }

    double mean(int n) const
    {
        const auto& v = rows_.at(n);
        double s = 0.0;
        for (double x : v)
            s += x;
        return s / static_cast<double>(v.size());
    }

private:
    std::map<int, std::vector<double>> rows_;
};

/// The admissible range of M_n: from the flat square up to all 2-tree faces.
inline bool size_within_bounds(int n, std::uint64_t m)
{
    const std::uint64_t k = static_cast<std::uint64_t>(n);
    return m >= k * k && m <= 3 * k * k * (k + 1) - k * k * k;
}

/// How per-n samples are aggregated before the log-log fit.
enum class FitMode {
    LogOfMean, ///< log of the per-n sample mean (default)
    MeanOfLog  ///< per-n mean of log sizes
};

struct ExponentEstimate
{
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<int> ns;
    std::vector<double> aggregates; ///< per-n value fed to the fit (before log for LogOfMean)
    std::size_t bootstrap_replicates = 0;
    double alpha = 0.05;
    double lo = 0.0;
    double hi = 0.0;
    std::string warning;

    bool interval_contains(double c) const noexcept { return lo <= c && c <= hi; }
};

namespace detail
{

struct LineFit
{
    double slope;
    double intercept;
};

// Ordinary least squares. Both coordinates are shifted by their first value
// before averaging so that constant data fits to an exact zero slope.
inline LineFit ols(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t k = x.size();
    const double x0 = x[0];
    const double y0 = y[0];
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mx += x[i] - x0;
        my += y[i] - y0;
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double dx = (x[i] - x0) - mx;
        sxy += dx * ((y[i] - y0) - my);
        sxx += dx * dx;
    }
    const double slope = sxy / sxx;
    return {slope, (y0 + my) - slope * (x0 + mx)};
}

inline double aggregate(const std::vector<double>& v, FitMode mode)
{
    double s = 0.0;
    if (mode == FitMode::LogOfMean) {
        for (double x : v)
            s += x;
        return std::log(s / static_cast<double>(v.size()));
    }
    for (double x : v)
        s += std::log(x);
    return s / static_cast<double>(v.size());
}

inline void check_table(const SizeTable& t)
{
    if (t.distinct_n() < 2)
        throw std::invalid_argument("need at least 2 distinct n values to fit an exponent");
    for (const auto& [n, v] : t.rows())
        if (v.empty())
            throw std::invalid_argument("no samples for n = " + std::to_string(n));
}

} // namespace detail

/// Slope of the least-squares line through (log n, log M_n-hat), unweighted
/// over distinct n.
inline ExponentEstimate fit_exponent(const SizeTable& table, FitMode mode = FitMode::LogOfMean)
{
    detail::check_table(table);
    ExponentEstimate est;
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& [n, v] : table.rows()) {
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(detail::aggregate(v, mode));
        est.ns.push_back(n);
        est.aggregates.push_back(mode == FitMode::LogOfMean ? table.mean(n) : std::exp(y.back()));
    }
    const auto fit = detail::ols(x, y);
    est.slope = fit.slope;
    est.intercept = fit.intercept;
    est.lo = est.hi = est.slope;
    return est;
}

/// Nonparametric percentile bootstrap. Each replicate resamples with
/// replacement within every n and refits; the interval drops the lowest and
/// highest floor(B*alpha/2) replicate slopes. Replicate b draws from its own
/// stream derived from (rng seed, b), so results do not depend on order.
inline ExponentEstimate bootstrap_ci(const SizeTable& table, std::size_t replicates, double alpha,
                                     const RngStream& rng, FitMode mode = FitMode::LogOfMean,
                                     std::vector<double>* slopes_out = nullptr)
{
    if (table.empty())
        throw std::invalid_argument("bootstrap on an empty table");
    if (replicates < 100)
        throw std::invalid_argument("bootstrap needs at least 100 replicates");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1)");

    ExponentEstimate est = fit_exponent(table, mode);
    est.bootstrap_replicates = replicates;
    est.alpha = alpha;

    std::vector<double> x;
    for (const auto& [n, v] : table.rows())
        x.push_back(std::log(static_cast<double>(n)));

    std::vector<double> slopes(replicates);
    std::vector<double> y(x.size());
    std::vector<double> resample;
    for (std::size_t b = 0; b < replicates; ++b) {
        RngStream r = rng.child({b});
        std::size_t i = 0;
        for (const auto& [n, v] : table.rows()) {
            resample.resize(v.size());
            for (auto& s : resample)
                s = v[r.bounded(v.size())];
            y[i++] = detail::aggregate(resample, mode);
        }
        slopes[b] = detail::ols(x, y).slope;
    }
    std::sort(slopes.begin(), slopes.end());
    const auto drop = static_cast<std::size_t>(std::floor(static_cast<double>(replicates) * alpha / 2.0));
    est.lo = slopes[drop];
    est.hi = slopes[replicates - 1 - drop];
    if (!(est.lo <= est.slope && est.slope <= est.hi))
        est.warning = "point estimate lies outside its bootstrap interval";
    if (slopes_out != nullptr)
        *slopes_out = std::move(slopes);
    return est;
}

/// Five-number summary plus mean of one sample list.
struct BoxSummary
{
    int n = 0;
    std::size_t count = 0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

/// Quantile by linear interpolation between order statistics at p*(k-1).
inline double quantile_sorted(const std::vector<double>& sorted, double p)
{
    if (sorted.empty())
        throw std::invalid_argument("quantile of an empty sample");
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline BoxSummary summarize_samples(int n, std::vector<double> v)
{
    if (v.empty())
        throw std::invalid_argument("summary of an empty sample list");
    std::sort(v.begin(), v.end());
    BoxSummary s;
    s.n = n;
    s.count = v.size();
    s.min = v.front();
    s.max = v.back();
    s.q1 = quantile_sorted(v, 0.25);
    s.median = quantile_sorted(v, 0.5);
    s.q3 = quantile_sorted(v, 0.75);
    double acc = 0.0;
    for (double x : v)
        acc += x;
    s.mean = acc / static_cast<double>(v.size());
    return s;
}

inline std::vector<BoxSummary> summarize(const SizeTable& table)
{
    std::vector<BoxSummary> out;
    for (const auto& [n, v] : table.rows())
        out.push_back(summarize_samples(n, v));
    return out;
}

// ---------------------------------------------------------------------------
// Goodness-of-fit helpers used by the sampler checks.

struct GofResult
{
    double statistic = 0.0;
    double critical = 0.0;
    std::size_t dof = 0;
    bool pass = false;
};

/// Pearson chi-square of observed counts against expected probabilities.
/// Categories with expected count below `min_expected` are pooled into one.
inline GofResult chi_square_gof(const std::vector<std::uint64_t>& observed,
                                const std::vector<double>& probs, double alpha,
                                double min_expected = 5.0)
{
    if (observed.size() != probs.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: size mismatch");
    double total = 0.0;
    for (auto o : observed)
        total += static_cast<double>(o);
    std::vector<double> obs;
    std::vector<double> exp;
    double pool_o = 0.0;
    double pool_e = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = probs[i] * total;
        if (e < min_expected) {
            pool_o += static_cast<double>(observed[i]);
            pool_e += e;
        } else {
            obs.push_back(static_cast<double>(observed[i]));
            exp.push_back(e);
        }
    }
    if (pool_e > 0.0 || pool_o > 0.0) {
        if (pool_e < min_expected && !exp.empty()) {
            // still too thin: fold into the smallest regular bin
            const auto k = static_cast<std::size_t>(std::min_element(exp.begin(), exp.end()) - exp.begin());
            obs[k] += pool_o;
            exp[k] += pool_e;
        } else {
            obs.push_back(pool_o);
            exp.push_back(pool_e);
        }
    }
    GofResult r;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (exp[i] <= 0.0) {
            if (obs[i] > 0.0)
                r.statistic = std::numeric_limits<double>::infinity();
            continue;
        }
        const double d = obs[i] - exp[i];
        r.statistic += d * d / exp[i];
    }
    r.dof = obs.size() > 1 ? obs.size() - 1 : 1;
    r.critical = boost::math::quantile(boost::math::complement(
        boost::math::chi_squared(static_cast<double>(r.dof)), alpha));
    r.pass = r.statistic <= r.critical;
    return r;
}

/// Two-sample chi-square homogeneity test on a 2 x k contingency table.
inline GofResult chi_square_two_sample(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b, double alpha)
{
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("chi_square_two_sample: size mismatch");
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]);
    }
    GofResult r;
    std::size_t used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double col = static_cast<double>(a[i] + b[i]);
        if (col == 0.0)
            continue;
        ++used;
        const double ea = col * na / (na + nb);
        const double eb = col * nb / (na + nb);
        r.statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
    }
    r.dof = used > 1 ? used - 1 : 1;
    r.critical = boost::math::quantile(boost::math::complement(
        boost::math::chi_squared(static_cast<double>(r.dof)), alpha));
    r.pass = r.statistic <= r.critical;
    return r;
}

/// Two-sided normal-approximation acceptance band for a binomial proportion:
/// |k/N - p| <= z_{1-alpha/2} sqrt(p(1-p)/N).
inline bool binomial_within(std::uint64_t successes, std::uint64_t trials, double p, double alpha)
{
    const double z = boost::math::quantile(boost::math::normal(), 1.0 - alpha / 2.0);
    const double phat = static_cast<double>(successes) / static_cast<double>(trials);
    return std::abs(phat - p) <= z * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

/// Total variation distance between an empirical histogram and a law.
inline double total_variation(const std::map<std::size_t, std::uint64_t>& hist,
                              const std::map<std::size_t, double>& law)
{
    double n = 0.0;
    for (const auto& [k, c] : hist)
        n += static_cast<double>(c);
    double tv = 0.0;
    for (const auto& [k, p] : law) {
        auto it = hist.find(k);
        const double q = it == hist.end() ? 0.0 : static_cast<double>(it->second) / n;
        tv += std::abs(p - q);
    }
    for (const auto& [k, c] : hist)
        if (law.find(k) == law.end())
            tv += static_cast<double>(c) / n;
    return tv / 2.0;
}

} // namespace lers

#endif
