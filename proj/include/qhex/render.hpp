#pragma once

// SVG and plain-text drawings of regions and tilings.

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"

namespace qhex {

namespace detail {

// Doubled-x lattice point to screen coordinates.
inline std::pair<double, double> screen(int X, int y, double scale) {
    return {X * scale * 0.5, y * scale * 0.8660254037844386};
}

}  // namespace detail

// Triangles as outlined polygons; if a tiling is supplied, each lozenge
// is drawn as one filled quadrilateral instead.
inline void render_svg(std::ostream& os, const Region& region,
                       const Tiling* tiling = nullptr, double scale = 24.0) {
    int xlo = 0, xhi = 0, ylo = 0, yhi = 1;
    bool first = true;
    for (const TriRef& t : region.cells()) {
        for (const auto& v : t.vertices()) {
            if (first || v[0] < xlo) xlo = v[0];
            if (first || v[0] > xhi) xhi = v[0];
            if (first || v[1] < ylo) ylo = v[1];
            if (first || v[1] > yhi) yhi = v[1];
            first = false;
        }
    }
    auto [x0, y0] = detail::screen(xlo - 1, ylo - 1, scale);
    auto [x1, y1] = detail::screen(xhi + 1, yhi + 1, scale);

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " "
       << y0 << " " << (x1 - x0) << " " << (y1 - y0) << "\">\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (x1 - x0)
       << "\" height=\"" << (y1 - y0) << "\" fill=\"white\"/>\n";

    auto polygon = [&](const std::vector<std::array<int, 2>>& pts,
                       const char* fill) {
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); i++) {
            auto [px, py] = detail::screen(pts[i][0], pts[i][1], scale);
            os << (i ? " " : "") << px << "," << py;
        }
        os << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    };

    if (tiling) {
        static const char* fills[3] = {"#c6dbef", "#fdd0a2", "#c7e9c0"};
        for (const auto& [up, down] : *tiling) {
            auto uv = up.vertices();
            auto dv = down.vertices();
            // Quadrilateral: union of the two triangles, dropping the
            // shared edge. Orientation class by relative position.
            int kind = (down.row == up.row + 1) ? 0 : (down.col < up.col ? 1 : 2);
            std::vector<std::array<int, 2>> quad;
            if (kind == 0) {
                quad = {uv[0], uv[1], {down.col, down.row + 1}, uv[2]};
            } else if (kind == 1) {
                quad = {uv[0], {down.col - 1, down.row}, uv[1], uv[2]};
            } else {
                quad = {uv[0], uv[1], uv[2], {down.col + 1, down.row}};
            }
            polygon(quad, fills[kind]);
        }
    } else {
        for (const TriRef& t : region.cells()) {
            auto v = t.vertices();
            polygon({v[0], v[1], v[2]}, t.up() ? "#eeeeee" : "#cccccc");
        }
    }
    os << "</svg>\n";
}

// Row-per-strip text sketch: '^' up cell, 'v' down cell.
inline std::string render_text(const Region& region) {
    if (region.empty()) return "(empty region)\n";
    std::map<int, std::map<int, char>> rows;
    int clo = region.cells().front().col, chi = clo;
    for (const TriRef& t : region.cells()) {
        rows[t.row][t.col] = t.up() ? '^' : 'v';
        clo = std::min(clo, t.col);
        chi = std::max(chi, t.col);
    }
    std::ostringstream out;
    for (auto& [r, row] : rows) {
        for (int c = clo; c <= chi; c++) {
            auto it = row.find(c);
            out << (it == row.end() ? ' ' : it->second);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qhex
