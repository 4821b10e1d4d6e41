// Command-line front end for the loop-erased random surface sampler.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 sampler abort.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lers/lers.hpp"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAbort = 3;

struct SampleArgs
{
    int n = 0;
    std::uint64_t seed = 0;
    std::string mesh;
    std::uint64_t max_steps = 0;
};

int write_mesh(const std::string& path, const lers::CubicalComplex& cx, const lers::Chain2& surface)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitUsage;
    }
    lers::write_obj(out, cx, surface);
    return kExitOk;
}

int run_sample(const SampleArgs& a)
{
    const lers::CubicalComplex cx = lers::build_complex(a.n);
    const lers::DualGraph dual = lers::build_dual(cx);
    lers::RngStream rng(a.seed);
    lers::LersOptions opts;
    opts.limits.max_steps = a.max_steps;
    const lers::LersSample s = lers::sample_lers(cx, dual, rng, opts);
    std::cout << "n=" << s.n << " seed=" << s.seed << " size=" << s.size << " steps=" << s.steps
              << " updates=" << s.updates << '\n';
    if (!a.mesh.empty())
        return write_mesh(a.mesh, cx, s.surface);
    return kExitOk;
}

struct SweepArgs
{
    lers::SweepConfig cfg;
    std::string out;
    bool quiet = false;
};

int run_sweep(const SweepArgs& a)
{
    const auto rows = lers::run_sweep(a.cfg, [&](const lers::SampleRecord& r) {
        if (!a.quiet && r.replicate + 1 == a.cfg.reps)
            std::cerr << "n=" << r.n << " done\n";
    });
    std::size_t aborted = 0;
    for (const auto& r : rows)
        aborted += r.ok() ? 0 : 1;
    if (a.out.empty() || a.out == "-") {
        lers::write_csv(std::cout, rows);
    } else {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << a.out << " for writing\n";
            return kExitUsage;
        }
        lers::write_csv(out, rows);
    }
    if (aborted > 0) {
        std::cerr << aborted << " of " << rows.size() << " samples aborted\n";
        return kExitAbort;
    }
    return kExitOk;
}

struct EstimateArgs
{
    std::string csv;
    std::size_t bootstrap = 1000;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::string svg;
    std::string mode = "log-of-mean";
};

int run_estimate(const EstimateArgs& a)
{
    std::vector<lers::SampleRecord> rows;
    {
        std::ifstream in(a.csv, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open " << a.csv << '\n';
            return kExitUsage;
        }
        try {
            rows = lers::read_csv(in);
        } catch (const lers::CsvError& e) {
            std::cerr << "error: " << a.csv << ": " << e.what() << '\n';
            return kExitValidation;
        }
    }
    const lers::SizeTable table = lers::table_from_records(rows);
    if (table.distinct_n() < 2) {
        std::cerr << "error: need successful samples for at least 2 distinct n\n";
        return kExitValidation;
    }
    for (const auto& r : rows) {
        if (r.ok() && !lers::size_within_bounds(r.n, r.size)) {
            std::cerr << "error: size " << r.size << " outside admissible range for n=" << r.n << '\n';
            return kExitValidation;
        }
    }
    const lers::FitMode mode = a.mode == "mean-of-log" ? lers::FitMode::MeanOfLog : lers::FitMode::LogOfMean;
    const lers::ExponentEstimate est =
        lers::bootstrap_ci(table, a.bootstrap, a.alpha, lers::RngStream(a.seed), mode);
    const auto boxes = lers::summarize(table);

    std::cout << std::setprecision(6) << std::fixed;
    std::cout << "n,count,min,q1,median,q3,max,mean\n";
    for (const auto& b : boxes)
        std::cout << b.n << ',' << b.count << ',' << b.min << ',' << b.q1 << ',' << b.median << ','
                  << b.q3 << ',' << b.max << ',' << b.mean << '\n';
    const double ref = 48.0 / 19.0;
    std::cout << "fit_mode: " << (mode == lers::FitMode::MeanOfLog ? "mean-of-log" : "log-of-mean") << '\n'
              << "slope: " << est.slope << '\n'
              << "intercept: " << est.intercept << '\n'
              << "bootstrap_replicates: " << est.bootstrap_replicates << '\n'
              << "alpha: " << est.alpha << '\n'
              << "interval: [" << est.lo << ", " << est.hi << "]\n"
              << "48/19 (" << ref << ") in interval: " << (est.interval_contains(ref) ? "yes" : "no")
              << '\n';
    if (!est.warning.empty())
        std::cerr << "warning: " << est.warning << '\n';
    if (!a.svg.empty()) {
        std::ofstream out(a.svg, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << a.svg << " for writing\n";
            return kExitUsage;
        }
        lers::write_svg_plot(out, boxes, est, ref);
    }
    return kExitOk;
}

struct VerifyArgs
{
    int n = 0;
    std::uint64_t reps = 100;
    std::uint64_t seed = 0;
    int max_n = 12;
    bool inject_fault = false;
};

int run_verify(const VerifyArgs& a)
{
    if (a.n > a.max_n) {
        std::cerr << "error: n=" << a.n << " exceeds --max-n " << a.max_n
                  << " (elimination cost grows as n^9)\n";
        return kExitUsage;
    }
    const lers::VerifyReport rep = lers::verify_run(a.n, a.reps, a.seed, a.inject_fault);
    std::cout << "n=" << rep.n << " reps=" << rep.reps << " violations=" << rep.violations << '\n';
    for (const auto& [name, count] : rep.failures_by_check)
        std::cout << "  failed " << name << ": " << count << '\n';
    std::cout << "size histogram:";
    for (const auto& [m, c] : rep.histogram)
        std::cout << ' ' << m << ':' << c;
    std::cout << '\n';
    for (const auto& line : rep.distribution_checks)
        std::cout << "  " << line << '\n';
    std::cout << (rep.ok() ? "PASS" : "FAIL") << '\n';
    return rep.ok() ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Loop-erased random surfaces on the cubical lattice"};
    app.require_subcommand(1);

    SampleArgs sample;
    auto* cmd_sample = app.add_subcommand("sample", "Draw one surface and print its size");
    cmd_sample->add_option("--n", sample.n, "Cubes per side")->required()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", sample.seed, "Stream seed (a sweep row's seed reproduces it)")->required();
    cmd_sample->add_option("--mesh", sample.mesh, "Write the surface as a Wavefront OBJ");
    cmd_sample->add_option("--max-steps", sample.max_steps, "Walk step cap (0 = default)");

    SampleArgs mesh;
    auto* cmd_mesh = app.add_subcommand("export-mesh", "Draw one surface and write it as OBJ");
    cmd_mesh->add_option("--n", mesh.n, "Cubes per side")->required()->check(CLI::PositiveNumber);
    cmd_mesh->add_option("--seed", mesh.seed, "Stream seed")->required();
    cmd_mesh->add_option("--out,--mesh", mesh.mesh, "Output OBJ path")->required();
    cmd_mesh->add_option("--max-steps", mesh.max_steps, "Walk step cap (0 = default)");

    SweepArgs sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Sample surfaces over a range of n and write CSV");
    cmd_sweep->add_option("--n-min", sweep.cfg.n_min)->required()->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--n-max", sweep.cfg.n_max)->required()->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--n-step", sweep.cfg.n_step)->default_val(1)->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--reps", sweep.cfg.reps)->required()->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--seed", sweep.cfg.master_seed, "Master seed")->required();
    cmd_sweep->add_option("--parallel", sweep.cfg.parallel, "Worker threads")->default_val(1);
    cmd_sweep->add_option("--out", sweep.out, "CSV output path (default stdout)");
    cmd_sweep->add_option("--max-steps", sweep.cfg.limits.max_steps, "Walk step cap (0 = default)");
    cmd_sweep->add_flag("--quiet", sweep.quiet, "No progress on stderr");

    EstimateArgs est;
    auto* cmd_est = app.add_subcommand("estimate", "Fit the growth exponent with a bootstrap interval");
    cmd_est->add_option("csv", est.csv, "Sample CSV from sweep")->required();
    cmd_est->add_option("--bootstrap,-B", est.bootstrap, "Bootstrap replicates")->default_val(1000)->check(CLI::Range(100, 100000000));
    cmd_est->add_option("--alpha", est.alpha, "1 - confidence level")->default_val(0.05)->check(CLI::Range(1e-6, 0.5));
    cmd_est->add_option("--seed", est.seed, "Bootstrap seed")->default_val(0);
    cmd_est->add_option("--svg", est.svg, "Write a log-log plot");
    cmd_est->add_option("--fit-mode", est.mode, "log-of-mean or mean-of-log")
        ->default_val("log-of-mean")
        ->check(CLI::IsMember({"log-of-mean", "mean-of-log"}));

    VerifyArgs ver;
    auto* cmd_ver = app.add_subcommand("verify", "Sample with full invariant checking");
    cmd_ver->add_option("--n", ver.n)->required()->check(CLI::PositiveNumber);
    cmd_ver->add_option("--reps", ver.reps)->default_val(100)->check(CLI::PositiveNumber);
    cmd_ver->add_option("--seed", ver.seed, "Master seed")->default_val(0);
    cmd_ver->add_option("--max-n", ver.max_n)->default_val(12);
    cmd_ver->add_flag("--inject-fault", ver.inject_fault, "Skip one surface update per sample (negative control)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_sample->parsed())
            return run_sample(sample);
        if (cmd_mesh->parsed())
            return run_sample(mesh);
        if (cmd_sweep->parsed())
            return run_sweep(sweep);
        if (cmd_est->parsed())
            return run_estimate(est);
        if (cmd_ver->parsed())
            return run_verify(ver);
    } catch (const lers::SamplerAbort& e) {
        std::cerr << "sampler aborted: " << e.what() << '\n';
        return kExitAbort;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}
