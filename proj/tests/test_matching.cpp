#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "qhex/formulas.hpp"
#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"

using namespace qhex;

TEST_CASE("dual graph basics") {
    REQUIRE(dual_graph(Region({}, "empty")).size() == 0);

    // the unit hexagon's six triangles form a 6-cycle
    DualGraph ring = dual_graph(build_hexagon(1, 1, 1));
    REQUIRE(ring.size() == 6);
    for (int v = 0; v < ring.size(); v++) REQUIRE(ring.adj[v].size() == 2);

    DualGraph g = dual_graph(build_quartered(2, 6, 3, {2, 3}));
    long long c1 = 0, c2 = 0;
    for (int v = 0; v < g.size(); v++) (g.in_class1(v) ? c1 : c2)++;
    REQUIRE(c1 == c2);
    for (int v = 0; v < g.size(); v++)
        for (int n : g.adj[v])
            REQUIRE(g.in_class1(v) != g.in_class1(n));
}

TEST_CASE("matching counts on small graphs") {
    REQUIRE(count_matchings(dual_graph(Region({}, "empty"))) == 1);
    REQUIRE(count_matchings(dual_graph(build_hexagon(1, 1, 1))) == 2);
    REQUIRE(count_tilings(build_hexagon(1, 1, 1)) == 2);
}

TEST_CASE("hexagon counts match the triple product") {
    for (int a = 0; a <= 2; a++)
        for (int b = 0; b <= 2; b++)
            for (int c = 0; c <= 2; c++)
                REQUIRE(count_tilings(build_hexagon(a, b, c)) ==
                        macmahon_count(a, b, c));
}

TEST_CASE("frozen counts") {
    REQUIRE(count_tilings(build_hexagon(2, 2, 2)) == 20);
    REQUIRE(count_tilings(build_quartered(2, 6, 3, {2, 3})) == 1848);
    REQUIRE(count_tilings(build_quartered(2, 5, 3, {2})) == 1056);
    REQUIRE(count_tilings(build_quartered(1, 2, 1, {1})) == 3);
    REQUIRE(count_tilings(build_staircase_trimmed(3, 6, 4)) == 182182);
}

TEST_CASE("unbalanced regions have no tilings") {
    // drop one down cell from the unit hexagon
    Region hex = build_hexagon(1, 1, 1);
    std::vector<TriRef> cells;
    bool dropped = false;
    for (const TriRef& t : hex.cells()) {
        if (!dropped && !t.up()) {
            dropped = true;
            continue;
        }
        cells.push_back(t);
    }
    REQUIRE(count_tilings(Region(cells, "holed")) == 0);
}

TEST_CASE("count is invariant under vertex relabeling") {
    Region r = build_quartered(1, 4, 1, {1, 2});
    DualGraph g = dual_graph(r);
    Count base = count_matchings(g);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; trial++) {
        std::vector<int> perm(g.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        DualGraph h;
        h.cells.resize(g.size());
        h.adj.assign(g.size(), {});
        for (int v = 0; v < g.size(); v++) h.cells[perm[v]] = g.cells[v];
        for (int v = 0; v < g.size(); v++)
            for (int n : g.adj[v]) h.adj[perm[v]].push_back(perm[n]);
        for (auto& lst : h.adj) std::sort(lst.begin(), lst.end());
        REQUIRE(count_matchings(h) == base);
    }
}

TEST_CASE("enumeration agrees with the count") {
    REQUIRE(enumerate_tilings(Region({}, "empty"), 10).size() == 1);
    REQUIRE(enumerate_tilings(build_hexagon(1, 1, 1), 10).size() == 2);

    for (int a = 0; a <= 1; a++)
        for (int b = 0; b <= 2; b++)
            for (int c = 0; c <= 2; c++) {
                Region r = build_hexagon(a, b, c);
                auto all = enumerate_tilings(r, 100000);
                REQUIRE(Count(all.size()) == count_tilings(r));
                REQUIRE(std::is_sorted(all.begin(), all.end()));
                // no duplicates, every tiling covers the region
                REQUIRE(std::adjacent_find(all.begin(), all.end()) ==
                        all.end());
                for (const auto& t : all)
                    REQUIRE(t.size() * 2 == r.size());
            }

    REQUIRE(enumerate_tilings(build_hexagon(2, 2, 2), 7).size() == 7);
}

TEST_CASE("condensation check validates its inputs") {
    DualGraph g = dual_graph(build_hexagon(1, 1, 1));
    REQUIRE_THROWS_AS(kuo_condensation_check(g, 0, 0, 1, 2),
                      std::invalid_argument);
    // balanced classes: violates |class1| = |class2| + 1
    REQUIRE_THROWS_AS(kuo_condensation_check(g, 0, 1, 2, 3),
                      std::invalid_argument);
}

TEST_CASE("condensation identity on a constructed instance") {
    // quartered region with its first dent filled back in; marked cells
    // at base positions d and s1 plus the two top-corner cells
    Region dented = build_quartered(2, 4, 3, {1});
    std::vector<TriRef> cells = dented.cells();
    cells.push_back({6, 6});  // base up-triangle at position 1 (r0=6, first=6)
    Region base(cells, "R(2,4,3) with open base");

    DualGraph g = dual_graph(base);
    int m = 0;
    for (const TriRef& t : base.cells())
        if (t.row == 0) m = std::max(m, t.col);
    int x = g.index_of({6, 6 + 2 * 2});  // position d = 3
    int y = g.index_of({6, 6});          // position s1 = 1
    int z = g.index_of({0, m - 1});
    int t = g.index_of({0, m - 2});

    KuoResult res = kuo_condensation_check(g, x, y, z, t);
    REQUIRE(res.holds);
    REQUIRE(res.counts[0] == 300);
    REQUIRE(res.counts[1] == 14);
    REQUIRE(res.counts[2] == 84);
    REQUIRE(res.counts[3] == 40);
    REQUIRE(res.counts[4] == 30);
    REQUIRE(res.counts[5] == 28);
}

TEST_CASE("graph fixture writer is deterministic") {
    DualGraph g = dual_graph(build_hexagon(1, 1, 1));
    std::ostringstream a, b;
    write_graph(a, g);
    write_graph(b, g);
    REQUIRE(a.str() == b.str());
    REQUIRE(a.str().rfind("p 6 6", 0) == 0);
}
