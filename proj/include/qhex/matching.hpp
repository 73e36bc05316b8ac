#pragma once

// Dual graph of a region and exact perfect-matching counts.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhex/lattice.hpp"

namespace qhex {

using Count = boost::multiprecision::cpp_int;

// Bipartite graph on the region's cells: class 1 holds the up-pointing
// triangles, class 2 the down-pointing ones. Vertex order is row-major
// over cells, so indices are reproducible.
struct DualGraph {
    std::vector<TriRef> cells;          // vertex id -> cell
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int size() const { return (int)cells.size(); }
    bool in_class1(int v) const { return cells[v].up(); }

    int index_of(const TriRef& t) const {
        auto it = std::lower_bound(cells.begin(), cells.end(), t);
        if (it == cells.end() || *it != t)
            throw std::invalid_argument("cell not in graph");
        return (int)(it - cells.begin());
    }
};

inline DualGraph dual_graph(const Region& region) {
    DualGraph g;
    g.cells = region.cells();
    g.adj.resize(g.cells.size());
    for (int v = 0; v < g.size(); v++) {
        for (const TriRef& n : g.cells[v].neighbors()) {
            auto it = std::lower_bound(g.cells.begin(), g.cells.end(), n);
            if (it != g.cells.end() && *it == n)
                g.adj[v].push_back((int)(it - g.cells.begin()));
        }
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    return g;
}

namespace detail {

// Alive-vertex sets as fixed-width bitmasks.
struct BitSet {
    std::vector<std::uint64_t> w;

    explicit BitSet(int nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= (std::uint64_t)1 << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~((std::uint64_t)1 << (i & 63)); }
    bool test(int i) const {
        return (w[i >> 6] >> (i & 63)) & 1;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool operator==(const BitSet& o) const { return w == o.w; }
};

struct BitSetHash {
    std::size_t operator()(const BitSet& b) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : b.w) {
            h ^= (std::size_t)x;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

class MatchCounter {
public:
    explicit MatchCounter(const DualGraph& g) : g_(g) {}

    Count count(BitSet alive) {
        long long c1 = 0, c2 = 0;
        for (int v = 0; v < g_.size(); v++) {
            if (!alive.test(v)) continue;
            (g_.in_class1(v) ? c1 : c2)++;
        }
        if (c1 != c2) return 0;
        return rec(std::move(alive));
    }

private:
    const DualGraph& g_;
    std::unordered_map<BitSet, Count, BitSetHash> memo_;

    int degree(const BitSet& alive, int v, int* mate) const {
        int deg = 0;
        for (int n : g_.adj[v]) {
            if (alive.test(n)) {
                *mate = n;
                deg++;
            }
        }
        return deg;
    }

    Count rec(BitSet alive) {
        if (!alive.any()) return 1;
        auto it = memo_.find(alive);
        if (it != memo_.end()) return it->second;
        const BitSet key = alive;

        // Forced edges: any degree-1 vertex fixes its matching edge.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g_.size(); v++) {
                if (!alive.test(v)) continue;
                int mate = -1;
                int deg = degree(alive, v, &mate);
                if (deg == 0) {
                    memo_.emplace(key, 0);
                    return 0;
                }
                if (deg == 1) {
                    alive.reset(v);
                    alive.reset(mate);
                    changed = true;
                }
            }
        }
        if (!alive.any()) {
            memo_.emplace(key, 1);
            return 1;
        }

        // Split off one connected component and multiply.
        int start = -1;
        for (int v = 0; v < g_.size() && start < 0; v++)
            if (alive.test(v)) start = v;
        BitSet comp((int)alive.w.size() * 64);
        std::vector<int> stack{start};
        comp.set(start);
        int comp_size = 0, alive_size = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp_size++;
            for (int n : g_.adj[v]) {
                if (alive.test(n) && !comp.test(n)) {
                    comp.set(n);
                    stack.push_back(n);
                }
            }
        }
        for (int v = 0; v < g_.size(); v++)
            if (alive.test(v)) alive_size++;
        if (comp_size < alive_size) {
            BitSet rest = alive;
            for (std::size_t i = 0; i < rest.w.size(); i++) rest.w[i] &= ~comp.w[i];
            Count result = rec(comp) * rec(rest);
            memo_.emplace(key, std::move(result));
            return memo_.at(key);
        }

        // Branch on a minimum-degree vertex.
        int pivot = -1, best = 4;
        for (int v = 0; v < g_.size(); v++) {
            if (!alive.test(v)) continue;
            int mate = -1;
            int deg = degree(alive, v, &mate);
            if (deg < best) {
                best = deg;
                pivot = v;
            }
        }
        Count total = 0;
        for (int n : g_.adj[pivot]) {
            if (!alive.test(n)) continue;
            BitSet next = alive;
            next.reset(pivot);
            next.reset(n);
            total += rec(std::move(next));
        }
        memo_.emplace(key, std::move(total));
        return memo_.at(key);
    }
};

}  // namespace detail

inline Count count_matchings(const DualGraph& graph,
                             const std::vector<int>& removed = {}) {
    detail::BitSet alive(graph.size());
    for (int v = 0; v < graph.size(); v++) alive.set(v);
    for (int v : removed) {
        if (v < 0 || v >= graph.size())
            throw std::invalid_argument("count_matchings: bad vertex id");
        alive.reset(v);
    }
    detail::MatchCounter counter(graph);
    return counter.count(std::move(alive));
}

inline Count count_tilings(const Region& region) {
    if (region.marked_untileable()) return 0;
    return count_matchings(dual_graph(region));
}

// A tiling as lozenges, each an (up cell, down cell) pair.
using Tiling = std::vector<std::pair<TriRef, TriRef>>;

namespace detail {

inline void enumerate_rec(const DualGraph& g, BitSet& alive,
                          std::vector<std::pair<int, int>>& partial,
                          std::vector<Tiling>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    int v = -1;
    for (int i = 0; i < g.size(); i++) {
        if (alive.test(i)) {
            v = i;
            break;
        }
    }
    if (v < 0) {
        Tiling t;
        for (auto [x, y] : partial) {
            TriRef a = g.cells[x], b = g.cells[y];
            if (!a.up()) std::swap(a, b);
            t.emplace_back(a, b);
        }
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
        return;
    }
    for (int n : g.adj[v]) {
        if (!alive.test(n)) continue;
        alive.reset(v);
        alive.reset(n);
        partial.emplace_back(v, n);
        enumerate_rec(g, alive, partial, out, limit);
        partial.pop_back();
        alive.set(v);
        alive.set(n);
    }
}

}  // namespace detail

inline std::vector<Tiling> enumerate_tilings(const Region& region,
                                             std::size_t limit) {
    std::vector<Tiling> out;
    if (limit == 0 || region.marked_untileable()) return out;
    DualGraph g = dual_graph(region);
    detail::BitSet alive(g.size());
    for (int v = 0; v < g.size(); v++) alive.set(v);
    std::vector<std::pair<int, int>> partial;
    detail::enumerate_rec(g, alive, partial, out, limit);
    std::sort(out.begin(), out.end());
    return out;
}

struct KuoResult {
    bool holds = false;
    // M(G-y), M(G-{x,z,t}), M(G-x), M(G-{y,z,t}), M(G-t), M(G-{x,y,z})
    std::array<Count, 6> counts;
};

// Condensation identity for a bipartite graph with |class1| = |class2|+1
// and marked vertices x, y, t in class 1, z in class 2 (the caller
// guarantees the four lie on one face in cyclic order):
//   M(G-y) M(G-{x,z,t}) = M(G-x) M(G-{y,z,t}) + M(G-t) M(G-{x,y,z})
inline KuoResult kuo_condensation_check(const DualGraph& graph, int x, int y,
                                        int z, int t) {
    std::set<int> marks{x, y, z, t};
    if (marks.size() != 4)
        throw std::invalid_argument("kuo: vertices must be distinct");
    for (int v : marks)
        if (v < 0 || v >= graph.size())
            throw std::invalid_argument("kuo: vertex id out of range");
    long long c1 = 0, c2 = 0;
    for (int v = 0; v < graph.size(); v++) (graph.in_class1(v) ? c1 : c2)++;
    if (c1 != c2 + 1)
        throw std::invalid_argument("kuo: needs |class1| = |class2| + 1");
    if (!graph.in_class1(x) || !graph.in_class1(y) || !graph.in_class1(t) ||
        graph.in_class1(z))
        throw std::invalid_argument("kuo: needs x,y,t in class 1 and z in class 2");

    KuoResult res;
    res.counts[0] = count_matchings(graph, {y});
    res.counts[1] = count_matchings(graph, {x, z, t});
    res.counts[2] = count_matchings(graph, {x});
    res.counts[3] = count_matchings(graph, {y, z, t});
    res.counts[4] = count_matchings(graph, {t});
    res.counts[5] = count_matchings(graph, {x, y, z});
    res.holds = res.counts[0] * res.counts[1] ==
                res.counts[2] * res.counts[3] + res.counts[4] * res.counts[5];
    return res;
}

// Graph fixture format: "p <vertices> <edges>", one "c <v> <1|2>" line
// per vertex class, then one "<u> <v>" line per edge.
inline void write_graph(std::ostream& os, const DualGraph& g) {
    std::size_t edges = 0;
    for (int v = 0; v < g.size(); v++)
        for (int n : g.adj[v])
            if (v < n) edges++;
    os << "p " << g.size() << " " << edges << "\n";
    for (int v = 0; v < g.size(); v++)
        os << "c " << v << " " << (g.in_class1(v) ? 1 : 2) << "\n";
    for (int v = 0; v < g.size(); v++)
        for (int n : g.adj[v])
            if (v < n) os << v << " " << n << "\n";
}

}  // namespace qhex
