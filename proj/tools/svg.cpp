#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "artifacts.hpp"
#include "stereodual/geometry.hpp"

namespace stereodual::cli {

namespace {

using Polyline = std::vector<std::pair<double, double>>;

constexpr double kSize = 480.0;
constexpr double kPad = 30.0;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Frame {
    double x0, x1, y0, y1;

    double sx(double x) const { return kPad + (x - x0) / (x1 - x0) * (kSize - 2 * kPad); }
    double sy(double y) const { return kSize - kPad - (y - y0) / (y1 - y0) * (kSize - 2 * kPad); }
};

Frame square_frame(const std::vector<Polyline>& lines, double min_half_width) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double cx = 0.0, cy = 0.0;
    double bx0 = lo, bx1 = hi, by0 = lo, by1 = hi;
    for (const auto& l : lines)
        for (const auto& [x, y] : l) {
            bx0 = std::min(bx0, x), bx1 = std::max(bx1, x);
            by0 = std::min(by0, y), by1 = std::max(by1, y);
        }
    if (bx0 <= bx1) {
        cx = 0.5 * (bx0 + bx1);
        cy = 0.5 * (by0 + by1);
        lo = 0.5 * std::max(bx1 - bx0, by1 - by0);
    } else {
        lo = 0.0;
    }
    hi = std::max(1.05 * lo, min_half_width);
    if (!(hi > 0.0)) hi = 1.0;
    return {cx - hi, cx + hi, cy - hi, cy + hi};
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void open_svg(std::ofstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kPad << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
}

void polyline(std::ofstream& out, const Frame& f, const Polyline& l, const char* color) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (const auto& [x, y] : l) out << num(f.sx(x)) << ',' << num(f.sy(y)) << ' ';
    out << "\"/>\n";
}

std::ofstream create(const std::filesystem::path& svg) {
    std::ofstream out(svg);
    if (!out) throw std::runtime_error("cannot write " + svg.string());
    return out;
}

}  // namespace

void plot_orbit_disk(const std::filesystem::path& csv, const std::filesystem::path& svg) {
    const CsvTable t = read_csv(csv);
    std::vector<Polyline> lines;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        const std::string& h = t.header[c];
        if (h.rfind("Re_z", 0) != 0) continue;
        const std::size_t ci = t.column("Im_z" + h.substr(4));
        Polyline l;
        for (const auto& row : t.rows) l.emplace_back(std::stod(row[c]), std::stod(row[ci]));
        lines.push_back(std::move(l));
    }
    const Frame f = square_frame(lines, 1.05);

    auto out = create(svg);
    open_svg(out, "stereographic plane");
    out << "<circle cx=\"" << num(f.sx(0)) << "\" cy=\"" << num(f.sy(0)) << "\" r=\""
        << num(f.sx(1) - f.sx(0)) << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (std::size_t k = 0; k < lines.size(); ++k) polyline(out, f, lines[k], kColors[k % 4]);
    out << "</svg>\n";
}

void plot_orbit_ambient(const std::filesystem::path& csv, int epsilon, double radius,
                        const std::filesystem::path& svg) {
    const CsvTable t = read_csv(csv);
    const std::size_t re = t.column("Re_z"), im = t.column("Im_z");
    const auto params = SpaceParams::oscillator(epsilon > 0 ? Curvature::sphere : Curvature::pseudosphere, radius, 0.0);
    // oblique projection: x1 to the right, x2 receding at 30 degrees, x3 up
    const double c = 0.5 * std::cos(M_PI / 6.0), s = 0.5 * std::sin(M_PI / 6.0);
    Polyline l;
    for (const auto& row : t.rows) {
        const AmbientPoint a = stereo_to_ambient(cplx(std::stod(row[re]), std::stod(row[im])), params);
        l.emplace_back(a.x[0] + c * a.x[1], a.x_last + s * a.x[1]);
    }
    const Frame f = square_frame({l}, 0.0);

    auto out = create(svg);
    open_svg(out, "ambient orbit (x1, x2, x3)");
    polyline(out, f, l, kColors[0]);
    out << "</svg>\n";
}

void plot_spectrum_ladder(const std::filesystem::path& csv, const std::filesystem::path& svg) {
    const CsvTable t = read_csv(csv);
    const std::size_t ec = t.column("energy"), wc = t.column("within_cutoff");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& row : t.rows) {
        const double e = std::stod(row[ec]);
        lo = std::min(lo, e), hi = std::max(hi, e);
    }
    if (!(lo <= hi)) lo = -1.0, hi = 1.0;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
    const Frame f{0.0, 1.0, lo - 0.05 * (hi - lo), hi + 0.05 * (hi - lo)};

    auto out = create(svg);
    open_svg(out, "energy levels");
    for (const auto& row : t.rows) {
        const double y = f.sy(std::stod(row[ec]));
        const bool ok = row[wc] == "1";
        out << "<line x1=\"" << num(f.sx(0.2)) << "\" x2=\"" << num(f.sx(0.8)) << "\" y1=\"" << num(y)
            << "\" y2=\"" << num(y) << "\" stroke=\"" << (ok ? kColors[0] : "#aaa") << "\""
            << (ok ? "" : " stroke-dasharray=\"5 3\"") << "/>\n";
    }
    out << "<text x=\"" << num(f.sx(0.82)) << "\" y=\"" << num(f.sy(hi) + 4) << "\" font-size=\"11\">"
        << num(hi) << "</text>\n"
        << "<text x=\"" << num(f.sx(0.82)) << "\" y=\"" << num(f.sy(lo) + 4) << "\" font-size=\"11\">"
        << num(lo) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace stereodual::cli
