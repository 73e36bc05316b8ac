#include <catch2/catch_amalgamated.hpp>

#include "qhex/formulas.hpp"
#include "qhex/lattice.hpp"
#include "qhex/matching.hpp"

using namespace qhex;

TEST_CASE("difference and sum products") {
    REQUIRE(delta_op({5}) == 1);
    REQUIRE(delta_op({}) == 1);
    REQUIRE(delta_op({1, 3, 4}) == 6);
    REQUIRE(star_op({}) == 1);
    REQUIRE(star_op({1, 2}) == 2);
    REQUIRE(star_op({1, 3, 4}) == 72);
    REQUIRE_THROWS_AS(delta_op({3, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(star_op({2, 2}), std::invalid_argument);

    // delta on 1..n is the superfactorial 1! 2! ... (n-1)!
    for (int n = 1; n <= 6; n++) {
        std::vector<long long> seq;
        for (long long j = 1; j <= n; j++) seq.push_back(j);
        Count super = 1, fact = 1;
        for (long long j = 1; j < n; j++) {
            fact *= j;
            super *= fact;
        }
        REQUIRE(delta_op(seq) == super);
    }
}

TEST_CASE("hexagon product formula") {
    REQUIRE(macmahon_count(0, 4, 7) == 1);
    REQUIRE(macmahon_count(1, 1, 1) == 2);
    REQUIRE(macmahon_count(2, 2, 2) == 20);
    REQUIRE(macmahon_count(3, 3, 3) == 980);
}

TEST_CASE("staircase-trimmed product formula") {
    REQUIRE(proctor_count(2, 3, 0) == 1);
    REQUIRE(proctor_count(0, 4, 3) == 1);
    REQUIRE(proctor_count(1, 1, 1) == 2);
    REQUIRE(proctor_count(3, 6, 4) == 182182);
    REQUIRE_THROWS_AS(proctor_count(1, 2, 3), std::invalid_argument);

    for (int a = 0; a <= 2; a++)
        for (int b = 0; b <= 3; b++)
            for (int c = 0; c <= b; c++)
                REQUIRE(proctor_count(a, b, c) ==
                        count_tilings(build_staircase_trimmed(a, b, c)));
}

TEST_CASE("odd-family product formula") {
    REQUIRE(formula_odd(QHParams{0, 5, 2, {1, 2}}) == 1);
    REQUIRE(formula_odd(QHParams{3, 0, 1, {}}) == 1);
    REQUIRE(formula_odd(QHParams{2, 6, 3, {2, 3}}) == 1848);
    REQUIRE(formula_odd(QHParams{2, 6, 3, {2, 3}}) ==
            count_tilings(build_quartered(2, 6, 3, {2, 3})));
    REQUIRE_THROWS_AS(formula_odd(QHParams{2, 5, 3, {2}}),
                      std::invalid_argument);
}

TEST_CASE("even-family product formula") {
    REQUIRE(formula_even(QHParams{0, 4, 2, {1}}) == 1);
    for (int a = 0; a <= 4; a++)
        REQUIRE(formula_even(QHParams{a, 1, 1, {}}) == a + 1);
    REQUIRE(formula_even(QHParams{2, 5, 3, {2}}) == 1056);
    REQUIRE(formula_even(QHParams{2, 5, 3, {2}}) ==
            count_tilings(build_quartered(2, 5, 3, {2})));
    REQUIRE_THROWS_AS(formula_even(QHParams{2, 6, 3, {2, 3}}),
                      std::invalid_argument);
}

TEST_CASE("ratio form equals the explicit odd product") {
    REQUIRE(formula_ratio_form(QHParams{0, 5, 2, {1, 2}}) == 1);
    for (int a = 0; a <= 2; a++) {
        for (int s1 = 1; s1 <= a + 1; s1++) {
            QHParams p{a, 3, 2, {s1}};
            REQUIRE(formula_ratio_form(p) == Ratio(formula_odd(p)));
        }
    }
    QHParams p{2, 6, 3, {2, 3}};
    REQUIRE(formula_ratio_form(p) == Ratio(formula_odd(p)));
}

TEST_CASE("two-term identity") {
    REQUIRE(identity_check(1, 3, 2));
    REQUIRE(identity_check(2, 5, 0));
    for (long long d = 2; d <= 10; d++)
        for (long long s1 = 1; s1 < d; s1++)
            for (long long c = 0; c <= 10; c++)
                REQUIRE(identity_check(s1, d, c));
    REQUIRE_THROWS_AS(identity_check(3, 3, 1), std::invalid_argument);
}

TEST_CASE("cancellation lemmas") {
    REQUIRE(ratio_lemma_check({1, 4, 5}, 3));
    REQUIRE(ratio_lemma_check({2, 3, 7, 9}, 5));
    REQUIRE_THROWS_AS(ratio_lemma_check({1, 2, 3}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(ratio_lemma_check({1, 2, 3}, 9), std::invalid_argument);
    REQUIRE_THROWS_AS(ratio_lemma_check({4}, 2), std::invalid_argument);
}

TEST_CASE("formula values are the master oracle for regions") {
    for (int a = 0; a <= 1; a++) {
        for (int c = 0; c <= 2; c++) {
            for (int k = 0; k <= 2; k++) {
                for (int parity = 0; parity <= 1; parity++) {
                    int b = c + 2 * k - 1 + parity;
                    if (b < 0) continue;
                    std::vector<int> dents;
                    for (int s = 1; s <= k; s++) dents.push_back(s);
                    QHParams p{a, b, c, dents};
                    Count fm =
                        p.odd_case() ? formula_odd(p) : formula_even(p);
                    REQUIRE(fm == count_tilings(build_quartered(p)));
                }
            }
        }
    }
}
