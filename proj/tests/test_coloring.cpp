#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "dicolor/coloring.hpp"
#include "dicolor/generators.hpp"
#include "test_util.hpp"

using namespace dicolor;

TEST_CASE("validate_coloring pinpoints a monochromatic cycle") {
    Digraph d = gen_directed_cycle(3);
    PartialColoring pc(3, 1);
    pc.colors = {0, 0, 0};
    ColoringCheck check = validate_coloring(d, pc);
    REQUIRE(!check.valid);
    CHECK(check.bad_color == 0);
    REQUIRE(check.cycle.size() == 3);
    for (size_t i = 0; i < check.cycle.size(); ++i) {
        int u = check.cycle[i];
        int v = check.cycle[(i + 1) % check.cycle.size()];
        CHECK(d.has_arc(u, v));
        CHECK(pc.colors[u] == check.bad_color);
    }

    pc.palette_size = 2;
    pc.colors = {0, 0, 1};  // class {0,1} induces only the arc 0->1
    CHECK(validate_coloring(d, pc).valid);

    SUBCASE("colors outside the palette are malformed input, not merely invalid") {
        PartialColoring bad(3, 1);
        bad.colors = {0, 1, 0};
        CHECK_THROWS_AS(validate_coloring(d, bad), std::invalid_argument);
    }
    SUBCASE("a partial coloring is judged on its colored part only") {
        PartialColoring part(3, 1);
        part.colors = {0, 0, PartialColoring::kUncolored};
        CHECK(validate_coloring(d, part).valid);
    }
}

TEST_CASE("greedy coloring on the 5-cycle reuses colors until the cycle closes") {
    Digraph d = gen_directed_cycle(5);
    PartialColoring pc = greedy_color(d, ascending_order(5), GreedySide::Out);
    CHECK(pc.colors == std::vector<int>{0, 0, 0, 0, 1});
    CHECK(pc.palette_size == 2);
    CHECK(validate_coloring(d, pc).valid);
}

TEST_CASE("greedy coloring respects the one-sided degree bound") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Digraph d = testutil::random_digraph(6 + static_cast<int>(seed) % 25,
                                             10 + static_cast<int>(seed * 7) % 80, seed);
        DegreeProfile p = degree_profile(d);
        PartialColoring out = greedy_color(d, ascending_order(d.vertex_count()), GreedySide::Out);
        PartialColoring in = greedy_color(d, ascending_order(d.vertex_count()), GreedySide::In);
        PartialColoring best = greedy_color_min(d, ascending_order(d.vertex_count()));
        CHECK(validate_coloring(d, out).valid);
        CHECK(validate_coloring(d, in).valid);
        CHECK(validate_coloring(d, best).valid);
        CHECK(out.palette_size <= p.max_out_degree + 1);
        CHECK(in.palette_size <= p.max_in_degree + 1);
        CHECK(best.palette_size <= std::min(p.max_out_degree, p.max_in_degree) + 1);
        CHECK(best.palette_size == std::min(out.palette_size, in.palette_size));
    }
}

TEST_CASE("extend_partial succeeds exactly when a color is free of the colored out-neighbors") {
    // Star 0 -> {1, 2, 3} with the leaves pinned to three distinct colors.
    Digraph d(4, {{0, 1}, {0, 2}, {0, 3}});
    PartialColoring pinned(4, 3);
    pinned.colors = {PartialColoring::kUncolored, 0, 1, 2};

    ExtendResult fail = extend_partial(d, pinned, {0});
    CHECK(!fail.success);
    CHECK(fail.failed_vertex == 0);

    pinned.palette_size = 4;
    ExtendResult ok = extend_partial(d, pinned, {0});
    REQUIRE(ok.success);
    CHECK(ok.coloring.colors[0] == 3);
    CHECK(ok.coloring.is_total());
    CHECK(validate_coloring(d, ok.coloring).valid);
}

TEST_CASE("extend_partial output is always a proper coloring when it succeeds") {
    for (uint64_t seed = 100; seed < 120; ++seed) {
        Digraph d = testutil::random_digraph(12, 30, seed);
        // Pin a valid partial: color vertices 0..5 greedily, leave the rest.
        PartialColoring base = greedy_color(d, ascending_order(12), GreedySide::Out);
        base.palette_size += 2;
        std::vector<int> rest;
        for (int v = 6; v < 12; ++v) {
            base.colors[v] = PartialColoring::kUncolored;
            rest.push_back(v);
        }
        ExtendResult r = extend_partial(d, base, rest);
        if (r.success) {
            CHECK(r.coloring.is_total());
            CHECK(validate_coloring(d, r.coloring).valid);
        }
    }
}

TEST_CASE("peeling colors round by round with strictly shrinking ceilings") {
    SUBCASE("exact rounds on the line-triangle tournament") {
        PeelResult r = peel_color(gen_fano(0));
        CHECK(r.round_ceilings == std::vector<int>{3, 2, 0});
        CHECK(r.coloring.palette_size == 3);
        CHECK(validate_coloring(gen_fano(0), r.coloring).valid);
    }
    SUBCASE("random instances, digons included") {
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            Digraph d = testutil::random_digraph(4 + static_cast<int>(seed), 40, seed * 11);
            DegreeProfile p = degree_profile(d);
            PeelResult r = peel_color(d);
            CHECK(validate_coloring(d, r.coloring).valid);
            CHECK(r.coloring.is_total());
            for (size_t i = 1; i < r.round_ceilings.size(); ++i)
                CHECK(r.round_ceilings[i] < r.round_ceilings[i - 1]);
            CHECK(r.coloring.palette_size <= p.degree_geo_ceil + 1);
        }
    }
}
