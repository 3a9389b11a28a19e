// io.hpp
//
// File formats: CSV with 17-significant-digit decimals (lossless double
// round trip, LF line endings) for grid signals, sigma transforms, and
// region maps, plus a plain rect-grid SVG raster for region maps.

#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgv1d/certify.hpp"
#include "tgv1d/signal.hpp"

namespace tgv1d {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

// ----------------------------------------------------------- grid CSV

inline void write_grid_csv(std::ostream& os, const GridSignal& u) {
    os << "x,value\n";
    for (std::size_t i = 0; i < u.n(); ++i)
        os << format_double(u.x(i)) << ',' << format_double(u.values[i])
           << '\n';
}

inline void write_grid_csv(const std::string& path, const GridSignal& u) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_grid_csv(os, u);
    if (!os) throw std::runtime_error("write failed: " + path);
}

// Reads a two-column CSV (optional header); the second column becomes the
// signal, the first is ignored apart from row counting.
inline GridSignal read_grid_csv(std::istream& is) {
    std::vector<double> vals;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("grid csv: missing comma in '" + line + "'");
        const std::string second = line.substr(comma + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(second, &used);
            vals.push_back(v);
        } catch (const std::exception&) {
            if (vals.empty()) continue;  // header row
            throw std::runtime_error("grid csv: bad number '" + second + "'");
        }
    }
    if (vals.size() < 4) throw std::runtime_error("grid csv: fewer than 4 rows");
    return GridSignal(std::move(vals));
}

inline GridSignal read_grid_csv(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_grid_csv(is);
}

// --------------------------------------------------------- sigma CSV

inline void write_sigma_csv(std::ostream& os, const GridSignal& r) {
    const SigmaTransforms t = sigma_transforms(r);
    os << "x,sigma1,sigma2\n";
    for (std::size_t j = 0; j < r.n(); ++j)
        os << format_double(r.edge(j)) << ',' << format_double(t.sigma1[j])
           << ',' << format_double(t.sigma2[j]) << '\n';
}

inline void write_sigma_csv(const std::string& path, const GridSignal& r) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_sigma_csv(os, r);
    if (!os) throw std::runtime_error("write failed: " + path);
}

// --------------------------------------------------------- region CSV

inline void write_region_csv(std::ostream& os, const RegionMapResult& rm) {
    os << "lambda1,lambda2,verdict,margin1,margin2\n";
    for (std::size_t i1 = 0; i1 < rm.lam1.size(); ++i1)
        for (std::size_t i2 = 0; i2 < rm.lam2.size(); ++i2) {
            const RegionCell& c = rm.at(i1, i2);
            os << format_double(rm.lam1[i1]) << ','
               << format_double(rm.lam2[i2]) << ','
               << (c.failed ? "Failed" : region_name(c.verdict.kind)) << ','
               << format_double(c.verdict.margin1) << ','
               << format_double(c.verdict.margin2) << '\n';
        }
}

inline void write_region_csv(const std::string& path,
                             const RegionMapResult& rm) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_region_csv(os, rm);
    if (!os) throw std::runtime_error("write failed: " + path);
}

// --------------------------------------------------------- region SVG

namespace detail {

inline const char* region_color(RegionKind k) {
    switch (k) {
        case RegionKind::Zero: return "#f2f2f2";
        case RegionKind::EqualsTV1: return "#1f77b4";
        case RegionKind::EqualsTV2: return "#2ca02c";
        case RegionKind::StrictTGV: return "#d62728";
        case RegionKind::Boundary: return "#b0b0b0";
    }
    return "#000000";
}

}  // namespace detail

// One colored rect per (lambda1, lambda2) cell; lambda1 runs left to
// right, lambda2 bottom to top.  Failed cells are black.  Inline legend,
// no external assets.
inline void write_region_svg(std::ostream& os, const RegionMapResult& rm) {
    const std::size_t n1 = rm.lam1.size(), n2 = rm.lam2.size();
    const int cell = 12, margin = 50, legend_h = 110;
    const int wpx = margin * 2 + cell * static_cast<int>(n1);
    const int hpx = margin * 2 + cell * static_cast<int>(n2) + legend_h;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx
       << "\" height=\"" << hpx << "\">\n";
    os << "<rect width=\"" << wpx << "\" height=\"" << hpx
       << "\" fill=\"white\"/>\n";
    for (std::size_t i1 = 0; i1 < n1; ++i1)
        for (std::size_t i2 = 0; i2 < n2; ++i2) {
            const RegionCell& c = rm.at(i1, i2);
            const char* color =
                c.failed ? "#000000" : detail::region_color(c.verdict.kind);
            const int px = margin + cell * static_cast<int>(i1);
            const int py = margin + cell * static_cast<int>(n2 - 1 - i2);
            os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\""
               << cell << "\" height=\"" << cell << "\" fill=\"" << color
               << "\"><title>l1=" << format_double(rm.lam1[i1])
               << " l2=" << format_double(rm.lam2[i2]) << " "
               << (c.failed ? "Failed" : region_name(c.verdict.kind))
               << "</title></rect>\n";
        }
    // axis labels: weight ranges at the corners
    const int gy = margin + cell * static_cast<int>(n2);
    os << "<text x=\"" << margin << "\" y=\"" << gy + 16
       << "\" font-size=\"11\">l1=" << format_double(rm.lam1.front())
       << "</text>\n";
    os << "<text x=\"" << margin + cell * static_cast<int>(n1) - 40 << "\" y=\""
       << gy + 16 << "\" font-size=\"11\">l1=" << format_double(rm.lam1.back())
       << "</text>\n";
    os << "<text x=\"4\" y=\"" << gy << "\" font-size=\"11\">l2="
       << format_double(rm.lam2.front()) << "</text>\n";
    os << "<text x=\"4\" y=\"" << margin + 10 << "\" font-size=\"11\">l2="
       << format_double(rm.lam2.back()) << "</text>\n";
    // legend
    const RegionKind kinds[] = {RegionKind::Zero, RegionKind::EqualsTV1,
                                RegionKind::EqualsTV2, RegionKind::StrictTGV,
                                RegionKind::Boundary};
    int ly = gy + 34;
    for (RegionKind k : kinds) {
        os << "<rect x=\"" << margin << "\" y=\"" << ly
           << "\" width=\"12\" height=\"12\" fill=\"" << detail::region_color(k)
           << "\" stroke=\"#333\"/>\n";
        os << "<text x=\"" << margin + 18 << "\" y=\"" << ly + 10
           << "\" font-size=\"12\">" << region_name(k) << "</text>\n";
        ly += 16;
    }
    os << "<rect x=\"" << margin << "\" y=\"" << ly
       << "\" width=\"12\" height=\"12\" fill=\"#000000\"/>\n";
    os << "<text x=\"" << margin + 18 << "\" y=\"" << ly + 10
       << "\" font-size=\"12\">Failed</text>\n";
    os << "</svg>\n";
}

inline void write_region_svg(const std::string& path,
                             const RegionMapResult& rm) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_region_svg(os, rm);
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace tgv1d
