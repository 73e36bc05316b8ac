#pragma once

// Triangular-lattice cells and region builders.
//
// A cell (row, col) is an up-pointing unit triangle iff row+col is even.
// Geometry lives in doubled-x coordinates (X = 2x, y = row), so every
// triangle vertex is an integer point:
//   up   (r,c): (c, r), (c-1, r+1), (c+1, r+1)
//   down (r,c): (c-1, r), (c+1, r), (c, r+1)

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhex {

struct TriRef {
    int row = 0;
    int col = 0;

    bool up() const { return ((row + col) % 2 + 2) % 2 == 0; }

    std::array<std::array<int, 2>, 3> vertices() const {
        if (up())
            return {{{col, row}, {col - 1, row + 1}, {col + 1, row + 1}}};
        return {{{col - 1, row}, {col + 1, row}, {col, row + 1}}};
    }

    // Lattice neighbors: left, right, and the vertical mate.
    std::array<TriRef, 3> neighbors() const {
        TriRef vert = up() ? TriRef{row + 1, col} : TriRef{row - 1, col};
        return {TriRef{row, col - 1}, TriRef{row, col + 1}, vert};
    }

    auto operator<=>(const TriRef&) const = default;
};

class Region {
public:
    Region() = default;
    Region(std::vector<TriRef> cells, std::string label)
        : cells_(std::move(cells)), label_(std::move(label)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    static Region untileable(std::string label) {
        Region r({}, std::move(label));
        r.untileable_ = true;
        return r;
    }

    const std::vector<TriRef>& cells() const { return cells_; }
    const std::string& label() const { return label_; }
    bool marked_untileable() const { return untileable_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains(const TriRef& t) const {
        return std::binary_search(cells_.begin(), cells_.end(), t);
    }

    bool operator==(const Region& o) const {
        return cells_ == o.cells_ && untileable_ == o.untileable_;
    }

private:
    std::vector<TriRef> cells_;  // sorted row-major
    std::string label_;
    bool untileable_ = false;
};

struct RegionStats {
    long long up = 0;
    long long down = 0;
    long long components = 0;
};

inline RegionStats region_stats(const Region& region) {
    RegionStats st;
    for (const TriRef& t : region.cells())
        (t.up() ? st.up : st.down)++;

    std::set<TriRef> unseen(region.cells().begin(), region.cells().end());
    while (!unseen.empty()) {
        st.components++;
        std::vector<TriRef> stack{*unseen.begin()};
        unseen.erase(unseen.begin());
        while (!stack.empty()) {
            TriRef t = stack.back();
            stack.pop_back();
            for (const TriRef& n : t.neighbors()) {
                auto it = unseen.find(n);
                if (it != unseen.end()) {
                    unseen.erase(it);
                    stack.push_back(n);
                }
            }
        }
    }
    return st;
}

namespace detail {

struct HalfPlane {
    long long a, b, c;  // a*X + b*y + c >= 0
    bool holds(int X, int y) const {
        return a * (long long)X + b * (long long)y + c >= 0;
    }
};

// Hexagon with side lengths s[0..5] clockwise from the north side,
// north-west corner at the origin. Side directions in (X, y):
// N (2,0), NE (1,1), SE (-1,1), S (-2,0), SW (-1,-1), NW (1,-1).
inline std::vector<TriRef> hexagon_cells(const std::array<int, 6>& sides) {
    static constexpr int dirs[6][2] = {{2, 0},  {1, 1},   {-1, 1},
                                       {-2, 0}, {-1, -1}, {1, -1}};
    std::array<std::array<long long, 2>, 7> pts{};
    for (int i = 0; i < 6; i++) {
        pts[i + 1][0] = pts[i][0] + (long long)dirs[i][0] * sides[i];
        pts[i + 1][1] = pts[i][1] + (long long)dirs[i][1] * sides[i];
    }
    if (pts[6] != pts[0])
        throw std::invalid_argument("hexagon side lengths do not close");

    // 6 * centroid, to stay in integers
    long long cx6 = 0, cy6 = 0;
    for (int i = 0; i < 6; i++) {
        cx6 += pts[i][0];
        cy6 += pts[i][1];
    }

    std::vector<HalfPlane> planes;
    for (int i = 0; i < 6; i++) {
        if (sides[i] == 0) continue;
        long long x1 = pts[i][0], y1 = pts[i][1];
        long long x2 = pts[i + 1][0], y2 = pts[i + 1][1];
        HalfPlane hp{y2 - y1, x1 - x2, 0};
        hp.c = -(hp.a * x1 + hp.b * y1);
        if (hp.a * cx6 + hp.b * cy6 + 6 * hp.c < 0) {
            hp.a = -hp.a;
            hp.b = -hp.b;
            hp.c = -hp.c;
        }
        planes.push_back(hp);
    }

    int ymax = sides[1] + sides[2];
    long long xlo = pts[0][0], xhi = pts[0][0];
    for (int i = 1; i < 6; i++) {
        xlo = std::min(xlo, pts[i][0]);
        xhi = std::max(xhi, pts[i][0]);
    }

    std::vector<TriRef> cells;
    for (int r = 0; r < ymax; r++) {
        for (int col = (int)xlo - 1; col <= (int)xhi + 1; col++) {
            TriRef t{r, col};
            bool inside = true;
            for (const auto& v : t.vertices()) {
                for (const HalfPlane& hp : planes) {
                    if (!hp.holds(v[0], v[1])) {
                        inside = false;
                        break;
                    }
                }
                if (!inside) break;
            }
            if (inside) cells.push_back(t);
        }
    }
    return cells;
}

inline std::string dents_suffix(const std::vector<int>& dents) {
    if (dents.empty()) return "";
    std::string s = "; ";
    for (std::size_t i = 0; i < dents.size(); i++) {
        if (i) s += ",";
        s += std::to_string(dents[i]);
    }
    return s;
}

}  // namespace detail

inline Region build_hexagon(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("build_hexagon: negative side");
    std::string label = "H(" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")";
    int zeros = (a == 0) + (b == 0) + (c == 0);
    if (zeros >= 2) return Region({}, label);
    return Region(detail::hexagon_cells({a, b, c, a, b, c}), label);
}

// Hexagon H(a,b,c) minus the maximal staircase at the east corner
// (where the b and c sides meet): for each of the c strips ending on
// the south-east side, the vertical lozenges protruding past the
// staircase profile are cut away.
inline Region build_staircase_trimmed(int a, int b, int c) {
    if (b < c)
        throw std::invalid_argument("build_staircase_trimmed: requires b >= c");
    Region hex = build_hexagon(a, b, c);
    std::set<TriRef> cells(hex.cells().begin(), hex.cells().end());
    for (int i = 1; i <= c; i++) {
        for (int j = b - i + 2; j <= b; j++) {
            int di = c - i, dj = j - 1;
            int X0 = 2 * a + dj - di, y0 = dj + di;
            for (TriRef t : {TriRef{y0, X0}, TriRef{y0 + 1, X0}}) {
                auto it = cells.find(t);
                if (it == cells.end())
                    throw std::logic_error("staircase cut left the hexagon");
                cells.erase(it);
            }
        }
    }
    std::string label = "P(" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")";
    return Region(std::vector<TriRef>(cells.begin(), cells.end()), label);
}

// Parameters of a quartered hexagon with base dents.
struct QHParams {
    int a = 0;
    int b = 0;
    int c = 0;
    std::vector<int> dents;  // strictly increasing

    bool odd_case() const { return ((b - c) % 2 + 2) % 2 == 1; }
    int k() const { return odd_case() ? (b - c + 1) / 2 : (b - c) / 2; }
    // Base of the extension: dent positions run in 1..d in the odd case,
    // extended entries are d+1..d+c.
    int d() const { return a + k(); }

    std::vector<long long> extended_seq() const {
        std::vector<long long> s(dents.begin(), dents.end());
        for (int i = 1; i <= c; i++) s.push_back(d() + i);
        return s;
    }

    void validate() const {
        if (a < 0 || b < 0 || c < 0)
            throw std::invalid_argument("QHParams: negative parameter");
        if (b < c - 1)
            throw std::invalid_argument("QHParams: b < c-1 not supported");
        if ((int)dents.size() != k())
            throw std::invalid_argument("QHParams: dent count must equal k");
        for (std::size_t i = 0; i < dents.size(); i++) {
            if (dents[i] < 1 || (i && dents[i] <= dents[i - 1]))
                throw std::invalid_argument(
                    "QHParams: dents must be strictly increasing, >= 1");
        }
        if (!dents.empty() && dents.back() > d())
            throw std::invalid_argument("QHParams: dent position out of range");
    }
};

// Right half of the auxiliary hexagon with sides
// (2a+1, b, c, 2a+b-c+1, c, b), with up-pointing base triangles removed
// at the dent positions (position 1 next to the cut axis, increasing
// rightward). The axis sits at doubled-x 2a+1; cells bisected by it are
// dropped, which keeps exactly the cells with col >= 2a+2.
inline Region build_quartered(const QHParams& p) {
    p.validate();
    std::string label = "R(" + std::to_string(p.a) + "," + std::to_string(p.b) +
                        "," + std::to_string(p.c) +
                        detail::dents_suffix(p.dents) + ")";
    if (p.b == 0 && p.c == 0) return Region({}, label);

    auto hex = detail::hexagon_cells(
        {2 * p.a + 1, p.b, p.c, 2 * p.a + p.b - p.c + 1, p.c, p.b});
    std::set<TriRef> cells;
    for (const TriRef& t : hex)
        if (t.col >= 2 * p.a + 2) cells.insert(t);

    int r0 = p.b + p.c - 1;
    int first = (r0 % 2 == 0) ? 2 * p.a + 2 : 2 * p.a + 3;
    for (int s : p.dents) {
        TriRef dent{r0, first + 2 * (s - 1)};
        auto it = cells.find(dent);
        if (it == cells.end() || !dent.up())
            throw std::logic_error("dent position misses a base up-triangle");
        cells.erase(it);
    }
    return Region(std::vector<TriRef>(cells.begin(), cells.end()), label);
}

inline Region build_quartered(int a, int b, int c, std::vector<int> dents) {
    return build_quartered(QHParams{a, b, c, std::move(dents)});
}

// Places every forced lozenge (a cell with a unique in-region neighbor)
// until fixpoint. Tiling count is preserved. A cell with no in-region
// neighbor makes the region untileable; the result is then the empty
// region flagged so that counting yields 0.
inline std::pair<Region, long long> remove_forced(const Region& region) {
    std::set<TriRef> live(region.cells().begin(), region.cells().end());
    long long placed = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = live.begin(); it != live.end();) {
            TriRef t = *it;
            TriRef only{};
            int deg = 0;
            for (const TriRef& n : t.neighbors()) {
                if (live.count(n)) {
                    only = n;
                    deg++;
                }
            }
            if (deg == 0)
                return {Region::untileable(region.label() + " [untileable]"),
                        placed};
            if (deg == 1) {
                live.erase(t);
                live.erase(only);
                placed++;
                changed = true;
                it = live.begin();
            } else {
                ++it;
            }
        }
    }
    return {Region(std::vector<TriRef>(live.begin(), live.end()),
                   region.label() + " [reduced]"),
            placed};
}

// Translate a region to the origin, preserving cell orientation parity,
// so shapes can be compared across positions.
inline Region normalize_translation(const Region& region) {
    if (region.empty()) return region;
    int r0 = region.cells().front().row, c0 = region.cells().front().col;
    for (const TriRef& t : region.cells()) {
        r0 = std::min(r0, t.row);
        c0 = std::min(c0, t.col);
    }
    if (((r0 + c0) % 2 + 2) % 2 != 0) c0 -= 1;
    std::vector<TriRef> moved;
    moved.reserve(region.size());
    for (const TriRef& t : region.cells())
        moved.push_back({t.row - r0, t.col - c0});
    return Region(std::move(moved), region.label());
}

// Text format: first line "region <label>", then one "r c" line per
// cell in row-major order.
inline void write_region(std::ostream& os, const Region& region) {
    os << "region " << region.label() << "\n";
    for (const TriRef& t : region.cells())
        os << t.row << " " << t.col << "\n";
}

inline Region read_region(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("region", 0) != 0)
        throw std::runtime_error("region file: missing header line");
    std::string label = line.size() > 7 ? line.substr(7) : "";
    std::vector<TriRef> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        TriRef t;
        if (!(ls >> t.row >> t.col))
            throw std::runtime_error("region file: bad cell line: " + line);
        cells.push_back(t);
    }
    return Region(std::move(cells), std::move(label));
}

}  // namespace qhex
