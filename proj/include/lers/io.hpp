#ifndef LERS_IO_HPP
#define LERS_IO_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chain.hpp"
#include "lattice.hpp"
#include "stats.hpp"

namespace lers
{

// ---------------------------------------------------------------------------
// Sample CSV: header `n,replicate,seed,size,steps,status`, LF endings.

struct SampleRecord
{
    int n = 0;
    std::uint64_t replicate = 0;
    std::uint64_t seed = 0;
    std::uint64_t size = 0;
    std::uint64_t steps = 0;
    std::string status = "ok";

    bool ok() const noexcept { return status == "ok"; }
    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

inline constexpr std::string_view kCsvHeader = "n,replicate,seed,size,steps,status";

class CsvError : public std::runtime_error
{
public:
    CsvError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& os, const SampleRecord& r)
{
    os << r.n << ',' << r.replicate << ',' << r.seed << ',' << r.size << ',' << r.steps << ','
       << r.status << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<SampleRecord>& rows)
{
    write_csv_header(os);
    for (const auto& r : rows)
        write_csv_row(os, r);
}

namespace detail
{

template <typename T>
T parse_field(std::string_view s, std::size_t line, const char* name)
{
    T value{};
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || p != end || s.empty())
        throw CsvError(line, std::string("bad ") + name + " field '" + std::string(s) + "'");
    return value;
}

} // namespace detail

/// Parses the sample CSV. Rejects a missing/incorrect header and malformed
/// rows, reporting the 1-based line number.
inline std::vector<SampleRecord> read_csv(std::istream& is)
{
    std::vector<SampleRecord> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!header) {
            if (line != kCsvHeader)
                throw CsvError(lineno, "expected header '" + std::string(kCsvHeader) + "'");
            header = true;
            continue;
        }
        if (line.empty())
            continue;
        std::vector<std::string_view> f;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            f.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (f.size() != 6)
            throw CsvError(lineno, "expected 6 fields, got " + std::to_string(f.size()));
        SampleRecord r;
        r.n = detail::parse_field<int>(f[0], lineno, "n");
        if (r.n < 1)
            throw CsvError(lineno, "n must be >= 1");
        r.replicate = detail::parse_field<std::uint64_t>(f[1], lineno, "replicate");
        r.seed = detail::parse_field<std::uint64_t>(f[2], lineno, "seed");
        r.size = detail::parse_field<std::uint64_t>(f[3], lineno, "size");
        r.steps = detail::parse_field<std::uint64_t>(f[4], lineno, "steps");
        r.status = std::string(f[5]);
        if (r.status.empty())
            throw CsvError(lineno, "empty status field");
        if (r.ok() && r.size == 0)
            throw CsvError(lineno, "ok row with zero size");
        rows.push_back(std::move(r));
    }
    if (!header)
        throw CsvError(lineno == 0 ? 1 : lineno, "empty CSV");
    return rows;
}

/// Successful rows of a sweep as a SizeTable.
inline SizeTable table_from_records(const std::vector<SampleRecord>& rows)
{
    SizeTable t;
    for (const auto& r : rows)
        if (r.ok())
            t.add(r.n, static_cast<double>(r.size));
    return t;
}

// ---------------------------------------------------------------------------
// Wavefront OBJ: one quad per face, shared vertices, lattice coordinates
// (+Z up, unit spacing).

inline void write_obj(std::ostream& os, const CubicalComplex& cx, const Chain2& surface)
{
    std::map<std::size_t, std::size_t> vid;
    std::vector<std::array<std::size_t, 4>> quads;
    surface.for_each([&](std::size_t f) {
        const CellId c = cx.face(f);
        const int a = static_cast<int>(c.axis);
        const int u = (a + 1) % 3;
        const int v = (a + 2) % 3;
        Coord p0 = c.anchor;
        Coord p1 = p0;
        p1[u] += 1;
        Coord p2 = p1;
        p2[v] += 1;
        Coord p3 = p0;
        p3[v] += 1;
        quads.push_back({cx.vertex_index(p0), cx.vertex_index(p1), cx.vertex_index(p2),
                         cx.vertex_index(p3)});
        for (auto i : quads.back())
            vid.emplace(i, 0);
    });
    os << "# loop-erased random surface, n=" << cx.n() << ", faces=" << quads.size() << '\n';
    std::size_t next = 1;
    for (auto& [i, id] : vid) {
        id = next++;
        const Coord p = cx.vertex(i).anchor;
        os << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
    for (const auto& q : quads)
        os << "f " << vid[q[0]] << ' ' << vid[q[1]] << ' ' << vid[q[2]] << ' ' << vid[q[3]] << '\n';
}

// ---------------------------------------------------------------------------
// SVG log-log plot of per-n box summaries with the fitted line.

inline void write_svg_plot(std::ostream& os, const std::vector<BoxSummary>& boxes,
                           const ExponentEstimate& est, double reference_exponent = 48.0 / 19.0)
{
    if (boxes.empty())
        throw std::invalid_argument("nothing to plot");
    const double width = 720.0;
    const double height = 540.0;
    const double left = 80.0;
    const double right = 30.0;
    const double top = 50.0;
    const double bottom = 60.0;

    double xmin = std::log(static_cast<double>(boxes.front().n));
    double xmax = std::log(static_cast<double>(boxes.back().n));
    double ymin = std::log(boxes.front().min);
    double ymax = std::log(boxes.front().max);
    for (const auto& b : boxes) {
        ymin = std::min(ymin, std::log(b.min));
        ymax = std::max(ymax, std::log(b.max));
    }
    if (xmax - xmin < 1e-9) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-9) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double padx = 0.05 * (xmax - xmin);
    const double pady = 0.05 * (ymax - ymin);
    xmin -= padx;
    xmax += padx;
    ymin -= pady;
    ymax += pady;

    auto sx = [&](double lx) { return left + (lx - xmin) / (xmax - xmin) * (width - left - right); };
    auto sy = [&](double ly) { return height - bottom - (ly - ymin) / (ymax - ymin) * (height - top - bottom); };

    std::ostringstream s;
    s << std::fixed << std::setprecision(2);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
    s << "<text x=\"" << (width / 2) << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\" font-size=\"14\">log n</text>\n";
    s << "<text x=\"20\" y=\"" << (height / 2) << "\" transform=\"rotate(-90 20 " << (height / 2)
      << ")\" text-anchor=\"middle\" font-size=\"14\">log M</text>\n";

    const double half = 6.0;
    for (const auto& b : boxes) {
        const double x = sx(std::log(static_cast<double>(b.n)));
        s << "<g class=\"n" << b.n << "\">\n";
        s << "<line x1=\"" << x << "\" y1=\"" << sy(std::log(b.min)) << "\" x2=\"" << x << "\" y2=\""
          << sy(std::log(b.max)) << "\" stroke=\"gray\"/>\n";
        for (double q : {b.min, b.max})
            s << "<line x1=\"" << x - half / 2 << "\" y1=\"" << sy(std::log(q)) << "\" x2=\""
              << x + half / 2 << "\" y2=\"" << sy(std::log(q)) << "\" stroke=\"gray\"/>\n";
        s << "<rect x=\"" << x - half << "\" y=\"" << sy(std::log(b.q3)) << "\" width=\"" << 2 * half
          << "\" height=\"" << sy(std::log(b.q1)) - sy(std::log(b.q3))
          << "\" fill=\"none\" stroke=\"black\"/>\n";
        s << "<line x1=\"" << x - half << "\" y1=\"" << sy(std::log(b.median)) << "\" x2=\""
          << x + half << "\" y2=\"" << sy(std::log(b.median)) << "\" stroke=\"black\"/>\n";
        s << "<circle cx=\"" << x << "\" cy=\"" << sy(std::log(b.mean))
          << "\" r=\"2.5\" fill=\"crimson\"/>\n";
        s << "</g>\n";
    }

    const double lx0 = xmin + padx;
    const double lx1 = xmax - padx;
    s << "<line x1=\"" << sx(lx0) << "\" y1=\"" << sy(est.intercept + est.slope * lx0) << "\" x2=\""
      << sx(lx1) << "\" y2=\"" << sy(est.intercept + est.slope * lx1)
      << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";

    s << std::setprecision(4);
    s << "<text x=\"" << left + 10 << "\" y=\"" << top - 20 << "\" font-size=\"14\">slope "
      << est.slope;
    if (est.bootstrap_replicates > 0)
        s << ", " << static_cast<int>(std::lround((1.0 - est.alpha) * 100)) << "% interval ["
          << est.lo << ", " << est.hi << "]; 48/19 "
          << (est.interval_contains(reference_exponent) ? "inside" : "outside");
    s << "</text>\n";
    s << "</svg>\n";
    os << s.str();
}

} // namespace lers

#endif
