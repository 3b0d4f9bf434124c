#include <doctest.h>

#include <stdexcept>

#include "dicolor/coloring.hpp"
#include "dicolor/errors.hpp"
#include "dicolor/exact.hpp"
#include "dicolor/generators.hpp"
#include "test_util.hpp"

using namespace dicolor;

TEST_CASE("exact minima on the standard shapes") {
    CHECK(chromatic_number(Digraph(0, {})).chi == 0);
    CHECK(chromatic_number(Digraph(1, {})).chi == 1);
    CHECK(chromatic_number(Digraph(4, {{0, 1}, {1, 2}, {2, 3}})).chi == 1);  // acyclic
    CHECK(chromatic_number(gen_directed_cycle(2)).chi == 2);
    CHECK(chromatic_number(gen_directed_cycle(9)).chi == 2);
    CHECK(chromatic_number(gen_bidirected_cycle(7)).chi == 3);
    CHECK(chromatic_number(gen_bidirected_cycle(8)).chi == 2);  // even length
    CHECK(chromatic_number(gen_bidirected_complete(5)).chi == 5);
    CHECK(chromatic_number(gen_fano(0)).chi == 3);
    CHECK(chromatic_number(gen_shared_triangles()).chi == 2);
}

TEST_CASE("decision interface brackets the minimum and returns checkable colorings") {
    Digraph d = gen_fano(0);
    CHECK(is_k_colorable(d, 2).status == SolveStatus::None);
    SolveResult three = is_k_colorable(d, 3);
    REQUIRE(three.status == SolveStatus::Found);
    CHECK(validate_coloring(d, three.coloring).valid);
    CHECK(three.coloring.is_total());
    // k >= n always succeeds via the rainbow coloring.
    CHECK(is_k_colorable(d, 7).status == SolveStatus::Found);
    CHECK(is_k_colorable(Digraph(0, {}), 0).status == SolveStatus::Found);
    CHECK(is_k_colorable(gen_directed_cycle(3), 0).status == SolveStatus::None);
    CHECK_THROWS_AS(is_k_colorable(d, -1), std::invalid_argument);
}

TEST_CASE("node budget cuts the search off with a resource status") {
    SolveLimits tight;
    tight.max_nodes = 1;
    // Deciding 4-colorability of bidirected K6 cannot finish in one node.
    SolveResult r = is_k_colorable(gen_bidirected_complete(6), 4, tight);
    CHECK(r.status == SolveStatus::ResourceLimit);
    CHECK(r.nodes >= 1);
    ChiResult c = chromatic_number(gen_bidirected_complete(6), tight);
    CHECK(c.status == SolveStatus::ResourceLimit);
}

TEST_CASE("search result agrees with the independent brute-force oracle") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 3 + static_cast<int>(seed % 5);
        int pct = 15 + static_cast<int>(seed * 13) % 70;
        Digraph d = testutil::random_digraph(n, pct, seed * 101);
        ChiResult fast = chromatic_number(d);
        REQUIRE(fast.status == SolveStatus::Found);
        CHECK(fast.chi == brute_force_chi(d));
        CHECK(validate_coloring(d, fast.coloring).valid);
    }
}

TEST_CASE("brute force is guarded against large inputs") {
    CHECK_THROWS_AS(brute_force_chi(Digraph(9, {})), GuardError);
    SolveLimits wide;
    wide.brute_force_max_n = 9;
    CHECK(brute_force_chi(Digraph(9, {}), wide) == 1);
}

TEST_CASE("list coloring honors the lists, not just the palette size") {
    Digraph d = gen_directed_cycle(3);
    ListAssignment same;
    same.lists = {{0}, {0}, {0}};
    same.universe = 1;
    CHECK(list_colorable(d, same).status == SolveStatus::None);

    ListAssignment escape;
    escape.lists = {{0}, {0}, {0, 1}};
    escape.universe = 2;
    SolveResult r = list_colorable(d, escape);
    REQUIRE(r.status == SolveStatus::Found);
    CHECK(r.coloring.colors[2] == 1);
    CHECK(validate_coloring(d, r.coloring).valid);

    SUBCASE("chromatic number equals list solving on uniform full lists") {
        for (uint64_t seed = 40; seed < 52; ++seed) {
            Digraph g = testutil::random_digraph(5, 45, seed);
            ChiResult chi = chromatic_number(g);
            ListAssignment full;
            full.universe = chi.chi;
            std::vector<int> all;
            for (int c = 0; c < chi.chi; ++c) all.push_back(c);
            full.lists.assign(5, all);
            CHECK(list_colorable(g, full).status == SolveStatus::Found);
            if (chi.chi > 1) {
                ListAssignment small;
                small.universe = chi.chi - 1;
                all.pop_back();
                small.lists.assign(5, all);
                CHECK(list_colorable(g, small).status == SolveStatus::None);
            }
        }
    }
}

TEST_CASE("mismatched list count is rejected") {
    ListAssignment wrong;
    wrong.lists = {{0}};
    wrong.universe = 1;
    CHECK_THROWS_AS(list_colorable(gen_directed_cycle(3), wrong), std::invalid_argument);
}
