#include "riskgeom/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "riskgeom/errors.hpp"

namespace riskgeom {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string region_svg(const std::vector<std::array<double, 2>>& polygon,
                       const std::optional<std::array<double, 2>>& marker) {
    if (polygon.empty()) throw ConfigError("svg: empty polygon");

    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    auto grow = [&](double x, double y) {
        xlo = std::min(xlo, x);
        xhi = std::max(xhi, x);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    };
    for (const auto& p : polygon) grow(p[0], p[1]);
    if (marker) grow((*marker)[0], (*marker)[1]);

    double extent = std::max(xhi - xlo, yhi - ylo);
    if (extent < 1e-9) extent = 1.0;  // singleton scene: give it room
    const double margin = 0.1 * extent;
    xlo -= margin;
    ylo -= margin;
    xhi += margin;
    yhi += margin;

    // Flip y: world (x, y) -> svg (x, -y); the view box follows the flip.
    const double vx = xlo, vy = -yhi, vw = xhi - xlo, vh = yhi - ylo;
    const double stroke = 0.004 * extent;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"";
    out += num(vx) + " " + num(vy) + " " + num(vw) + " " + num(vh) + "\">\n";

    // Coordinate axes where they cross the scene.
    auto axis = [&](double x1, double y1, double x2, double y2) {
        out += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(-y1) + "\" x2=\"" + num(x2) +
               "\" y2=\"" + num(-y2) + "\" stroke=\"#c8c8c8\" stroke-width=\"" +
               num(0.5 * stroke) + "\"/>\n";
    };
    if (ylo < 0.0 && yhi > 0.0) axis(xlo, 0.0, xhi, 0.0);
    if (xlo < 0.0 && xhi > 0.0) axis(0.0, ylo, 0.0, yhi);

    // Distinguish a genuine polygon from a collapsed (singleton) region.
    double spread = 0.0;
    for (const auto& p : polygon)
        spread = std::max({spread, std::abs(p[0] - polygon[0][0]), std::abs(p[1] - polygon[0][1])});
    if (spread < 1e-9) {
        out += "  <circle cx=\"" + num(polygon[0][0]) + "\" cy=\"" + num(-polygon[0][1]) +
               "\" r=\"" + num(0.01 * extent) + "\" fill=\"#1f6feb\"/>\n";
    } else {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) {
            if (i) out += ' ';
            out += num(polygon[i][0]) + "," + num(-polygon[i][1]);
        }
        out += "\" fill=\"#1f6feb\" fill-opacity=\"0.25\" stroke=\"#1f6feb\" stroke-width=\"" +
               num(stroke) + "\"/>\n";
    }

    if (marker) {
        const double mx = (*marker)[0], my = -(*marker)[1];
        const double r = 0.015 * extent;
        out += "  <circle cx=\"" + num(mx) + "\" cy=\"" + num(my) + "\" r=\"" + num(r) +
               "\" fill=\"none\" stroke=\"#d1242f\" stroke-width=\"" + num(stroke) + "\"/>\n";
        out += "  <line x1=\"" + num(mx - r) + "\" y1=\"" + num(my) + "\" x2=\"" + num(mx + r) +
               "\" y2=\"" + num(my) + "\" stroke=\"#d1242f\" stroke-width=\"" + num(0.7 * stroke) +
               "\"/>\n";
        out += "  <line x1=\"" + num(mx) + "\" y1=\"" + num(my - r) + "\" x2=\"" + num(mx) +
               "\" y2=\"" + num(my + r) + "\" stroke=\"#d1242f\" stroke-width=\"" +
               num(0.7 * stroke) + "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace riskgeom
