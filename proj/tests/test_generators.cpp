#include <doctest.h>

#include <stdexcept>

#include <set>

#include "dicolor/enumerate.hpp"
#include "dicolor/exact.hpp"
#include "dicolor/generators.hpp"

using namespace dicolor;

TEST_CASE("uniform_below draws exactly the requested range, deterministically") {
    std::mt19937_64 rng(42);
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
    for (int i = 0; i < 100; ++i) CHECK(uniform_below(rng, 1) == 0);

    std::set<uint64_t> hit;
    for (int i = 0; i < 200; ++i) hit.insert(uniform_below(rng, 7));
    CHECK(hit.size() == 7);
    CHECK(*hit.rbegin() == 6);

    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 50; ++i) CHECK(uniform_below(a, 1000) == uniform_below(b, 1000));
}

TEST_CASE("fixed shapes have the advertised arc sets") {
    CHECK(gen_directed_cycle(2).arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
    CHECK(gen_chorded_cycle(4).arcs() ==
          std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 0}});
    Digraph bc = gen_bidirected_cycle(3);
    CHECK(bc.arc_count() == 6);
    CHECK(find_digons(bc).size() == 3);
    Digraph k4 = gen_bidirected_complete(4);
    CHECK(k4.arc_count() == 12);
    Digraph st = gen_shared_triangles();
    CHECK(st.vertex_count() == 5);
    CHECK(st.out_degree(0) == 2);
    // The shared vertex has out {1, 3} and in {2, 4}: product 4, ceiling 2.
    CHECK(degree_profile(st).max_degree_product == 4);
    CHECK(degree_profile(st).degree_geo_ceil == 2);

    CHECK_THROWS_AS(gen_directed_cycle(1), std::invalid_argument);
    CHECK_THROWS_AS(gen_bidirected_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_chorded_cycle(3), std::invalid_argument);
}

TEST_CASE("every orientation choice yields a line-triangle tournament") {
    std::set<unsigned __int128> forms;
    for (unsigned o = 0; o < 128; ++o) {
        Digraph d = gen_fano(o);
        CHECK(d.vertex_count() == 7);
        CHECK(d.arc_count() == 21);
        CHECK(find_digons(d).empty());
        for (int v = 0; v < 7; ++v) {
            CHECK(d.out_degree(v) == 3);
            CHECK(d.in_degree(v) == 3);
        }
        forms.insert(canonical_form(d));
    }
    // The 128 line-rotation choices land in exactly two isomorphism
    // classes (one holds the default orientation), and both need three
    // colors — no rotation choice reaches the 2-colorable regular class.
    CHECK(forms.size() == 2);
    CHECK(forms.count(canonical_form(gen_fano(0))) == 1);
    for (unsigned __int128 bits : forms)
        CHECK(chromatic_number(digraph_from_bits(7, bits)).chi == 3);
}

TEST_CASE("random tournaments orient every pair exactly once, per seed") {
    Digraph a = gen_random_tournament(9, 5);
    Digraph b = gen_random_tournament(9, 5);
    Digraph c = gen_random_tournament(9, 6);
    CHECK(a.arcs() == b.arcs());
    CHECK(a.arcs() != c.arcs());
    CHECK(a.arc_count() == 36);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            CHECK(a.has_arc(u, v) != a.has_arc(v, u));
}

TEST_CASE("random regular digraphs: exact degrees, no digons, tight size bound") {
    for (auto [n, delta] : std::vector<std::pair<int, int>>{{5, 2}, {9, 4}, {40, 7}, {21, 10}}) {
        Digraph d = gen_random_regular_digonfree(n, delta, 11);
        CHECK(d.arc_count() == n * delta);
        CHECK(find_digons(d).empty());
        for (int v = 0; v < n; ++v) {
            CHECK(d.out_degree(v) == delta);
            CHECK(d.in_degree(v) == delta);
        }
    }
    Digraph x = gen_random_regular_digonfree(30, 5, 3);
    Digraph y = gen_random_regular_digonfree(30, 5, 3);
    CHECK(x.arcs() == y.arcs());

    CHECK_THROWS_AS(gen_random_regular_digonfree(10, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_regular_digonfree(4, 2, 1), std::invalid_argument);
}

TEST_CASE("rotational tournaments require exactly one residue per opposite pair") {
    Digraph d = gen_rotational_tournament(7, {1, 2, 4});
    for (int v = 0; v < 7; ++v) {
        CHECK(d.out_degree(v) == 3);
        CHECK(d.in_degree(v) == 3);
    }
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(0, 2));
    CHECK(d.has_arc(0, 4));
    CHECK(d.has_arc(3, 0));  // 0 - 3 = 4 mod 7

    // {1,2,3,5} on 9 vertices picks one residue from each opposite pair
    // (1,8), (2,7), (3,6), (4,5) and is therefore a valid choice.
    Digraph nine = gen_rotational_tournament(9, {1, 2, 3, 5});
    CHECK(nine.arc_count() == 36);
    CHECK(find_digons(nine).empty());

    // 8 is the opposite of 1, so {1,2,3,8} double-covers one pair and
    // misses (4,5).
    CHECK_THROWS_AS(gen_rotational_tournament(9, {1, 2, 3, 8}), std::invalid_argument);
    CHECK_THROWS_AS(gen_rotational_tournament(6, {1, 2}), std::invalid_argument);  // even n
    CHECK_THROWS_AS(gen_rotational_tournament(7, {1, 2}), std::invalid_argument);  // too few
    CHECK_THROWS_AS(gen_rotational_tournament(7, {0, 1, 2}), std::invalid_argument);
}
