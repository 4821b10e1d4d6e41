#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "lers/stats.hpp"

using namespace lers;
using Catch::Matchers::WithinAbs;

namespace
{

double normal(RngStream& rng)
{
    const double u = 1.0 - rng.uniform01();
    const double v = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

SizeTable power_law(double c, double a, int reps)
{
    SizeTable t;
    for (int n = 5; n <= 40; n += 5)
        for (int r = 0; r < reps; ++r)
            t.add(n, c * std::pow(n, a));
    return t;
}

} // namespace

TEST_CASE("exact power law gives the exponent to machine precision")
{
    const SizeTable t = power_law(7.0, 2.5, 3);
    const ExponentEstimate e = fit_exponent(t);
    CHECK_THAT(e.slope, WithinAbs(2.5, 1e-12));
    CHECK_THAT(std::exp(e.intercept), WithinAbs(7.0, 1e-9));
    CHECK(e.ns.size() == 8);

    const ExponentEstimate b = bootstrap_ci(t, 1000, 0.05, RngStream(1));
    CHECK(b.lo == b.slope);
    CHECK(b.hi == b.slope);
    CHECK(b.warning.empty());

    const ExponentEstimate g = fit_exponent(t, FitMode::MeanOfLog);
    CHECK_THAT(g.slope, WithinAbs(2.5, 1e-12));
}

TEST_CASE("constant sizes give slope zero")
{
    const SizeTable t = power_law(42.0, 0.0, 4);
    CHECK(fit_exponent(t).slope == 0.0);
    const ExponentEstimate b = bootstrap_ci(t, 200, 0.05, RngStream(3));
    CHECK(b.lo == 0.0);
    CHECK(b.hi == 0.0);
}

TEST_CASE("estimator argument checks")
{
    SizeTable empty;
    CHECK_THROWS_AS(fit_exponent(empty), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_ci(empty, 1000, 0.05, RngStream(1)), std::invalid_argument);

    SizeTable one;
    one.add(5, 30.0);
    one.add(5, 31.0);
    CHECK_THROWS_AS(fit_exponent(one), std::invalid_argument);

    const SizeTable t = power_law(1.0, 2.0, 2);
    CHECK_THROWS_AS(bootstrap_ci(t, 99, 0.05, RngStream(1)), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_ci(t, 100, 0.0, RngStream(1)), std::invalid_argument);
    CHECK_THROWS_AS(one.add(6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(one.add(0, 1.0), std::invalid_argument);
}

TEST_CASE("estimate does not depend on row order")
{
    RngStream rng(8);
    std::vector<std::pair<int, double>> rows;
    for (int n : {4, 8, 16, 32})
        for (int r = 0; r < 20; ++r)
            rows.emplace_back(n, std::pow(n, 2.5) * std::exp(0.2 * normal(rng)));

    SizeTable fwd;
    SizeTable rev;
    for (const auto& [n, m] : rows)
        fwd.add(n, m);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        rev.add(it->first, it->second);
    // the bootstrap resamples by index, so only the point fit is order free
    CHECK_THAT(fit_exponent(fwd).slope, WithinAbs(fit_exponent(rev).slope, 1e-12));
}

TEST_CASE("bootstrap is reproducible for a fixed seed")
{
    RngStream rng(9);
    SizeTable t;
    for (int n : {5, 10, 20})
        for (int r = 0; r < 30; ++r)
            t.add(n, std::pow(n, 2.0) * std::exp(0.3 * normal(rng)));
    std::vector<double> s1, s2;
    const auto a = bootstrap_ci(t, 500, 0.05, RngStream(77), FitMode::LogOfMean, &s1);
    const auto b = bootstrap_ci(t, 500, 0.05, RngStream(77), FitMode::LogOfMean, &s2);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
    CHECK(s1 == s2);
    CHECK(s1.size() == 500);
    CHECK(a.lo <= a.slope);
    CHECK(a.slope <= a.hi);
    CHECK(a.interval_contains(2.0));
    const auto c = bootstrap_ci(t, 500, 0.05, RngStream(78));
    CHECK(c.lo != a.lo);
}

TEST_CASE("bootstrap interval covers the true exponent under lognormal noise")
{
    const double a = 2.5;
    int covered = 0;
    const int trials = 200;
    for (int k = 0; k < trials; ++k) {
        RngStream rng(derive_seed(4242, {static_cast<std::uint64_t>(k)}));
        SizeTable t;
        for (int n = 5; n <= 40; n += 5)
            for (int r = 0; r < 50; ++r)
                t.add(n, 3.0 * std::pow(n, a) * std::exp(0.05 * normal(rng)));
        const ExponentEstimate e = bootstrap_ci(t, 500, 0.05, rng.child({1}));
        if (e.interval_contains(a))
            ++covered;
    }
    INFO("covered " << covered << " of " << trials);
    CHECK(covered >= 180);
}

TEST_CASE("box summaries")
{
    const BoxSummary s = summarize_samples(3, {5, 1, 4, 2, 3});
    CHECK(s.n == 3);
    CHECK(s.count == 5);
    CHECK(s.min == 1);
    CHECK(s.q1 == 2);
    CHECK(s.median == 3);
    CHECK(s.q3 == 4);
    CHECK(s.max == 5);
    CHECK(s.mean == 3);

    const BoxSummary one = summarize_samples(1, {9});
    CHECK(one.min == 9);
    CHECK(one.median == 9);
    CHECK(one.max == 9);

    const BoxSummary even = summarize_samples(2, {1, 2, 3, 4});
    CHECK(even.median == 2.5);
    CHECK(even.q1 == 1.75);
    CHECK_THROWS_AS(summarize_samples(1, {}), std::invalid_argument);

    SizeTable t;
    t.add(4, 16);
    t.add(2, 4);
    const auto boxes = summarize(t);
    REQUIRE(boxes.size() == 2);
    CHECK(boxes[0].n == 2);
    CHECK(boxes[1].n == 4);
}

TEST_CASE("mean-of-log differs from log-of-mean on skewed data")
{
    SizeTable t;
    for (int n : {2, 4})
        for (double m : {1.0, 100.0})
            t.add(n, m * (n == 4 ? 4.0 : 1.0));
    // both modes see the same factor of 4 between n=2 and n=4
    CHECK_THAT(fit_exponent(t, FitMode::LogOfMean).slope, WithinAbs(2.0, 1e-12));
    CHECK_THAT(fit_exponent(t, FitMode::MeanOfLog).slope, WithinAbs(2.0, 1e-12));
    const auto lm = fit_exponent(t, FitMode::LogOfMean);
    const auto ml = fit_exponent(t, FitMode::MeanOfLog);
    CHECK(lm.aggregates[0] == 50.5);
    CHECK_THAT(ml.aggregates[0], WithinAbs(10.0, 1e-9));
}

TEST_CASE("goodness-of-fit helpers")
{
    const GofResult ok = chi_square_gof({100, 100, 100}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 0.01);
    CHECK(ok.pass);
    CHECK(ok.statistic == 0.0);
    CHECK(ok.dof == 2);
    CHECK_THAT(ok.critical, WithinAbs(9.21034, 1e-4));
    CHECK_FALSE(chi_square_gof({300, 0, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, 0.01).pass);
    // tiny-expectation bins are pooled
    CHECK(chi_square_gof({500, 499, 1}, {0.5, 0.499, 0.001}, 0.01).dof == 1);
    CHECK_THROWS_AS(chi_square_gof({1}, {0.5, 0.5}, 0.01), std::invalid_argument);

    CHECK(chi_square_two_sample({50, 50}, {48, 52}, 0.01).pass);
    CHECK_FALSE(chi_square_two_sample({100, 0}, {0, 100}, 0.01).pass);

    CHECK(binomial_within(500, 1000, 0.5, 0.01));
    CHECK_FALSE(binomial_within(600, 1000, 0.5, 0.01));

    CHECK(total_variation({{1, 5}, {5, 5}}, {{1, 0.5}, {5, 0.5}}) == 0.0);
    CHECK_THAT(total_variation({{1, 10}}, {{1, 0.5}, {5, 0.5}}), WithinAbs(0.5, 1e-15));
    CHECK_THAT(total_variation({{2, 10}}, {{1, 1.0}}), WithinAbs(1.0, 1e-15));
}

TEST_CASE("size bounds")
{
    CHECK(size_within_bounds(1, 1));
    CHECK(size_within_bounds(1, 5));
    CHECK_FALSE(size_within_bounds(1, 6));
    CHECK_FALSE(size_within_bounds(2, 3));
    CHECK(size_within_bounds(2, 28));
    CHECK_FALSE(size_within_bounds(2, 29));
}
