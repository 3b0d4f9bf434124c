// Acceptance gate for the toolkit: ten criteria, one PASS/FAIL line each,
// exit code = number of failures. Each criterion states its tolerance
// inline; "zero tolerance" criteria fail on the first violation.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/enumerate.hpp"
#include "dicolor/exact.hpp"
#include "dicolor/generators.hpp"
#include "dicolor/lll.hpp"
#include "dicolor/structure.hpp"
#include "test_util.hpp"

using namespace dicolor;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string fail(const std::string& detail) { return detail; }
constexpr const char* kPass = "";

// ---------------------------------------------------------------- criterion 1
// Exact coloring numbers of the three obstruction families; zero tolerance.
std::string obstruction_regression() {
    for (int n = 2; n <= 12; ++n) {
        ChiResult r = chromatic_number(gen_directed_cycle(n));
        if (r.status != SolveStatus::Found || r.chi != 2)
            return fail("directed cycle n=" + std::to_string(n) + " chi=" + std::to_string(r.chi));
    }
    for (int len = 3; len <= 11; len += 2) {
        ChiResult r = chromatic_number(gen_bidirected_cycle(len));
        if (r.status != SolveStatus::Found || r.chi != 3)
            return fail("bidirected cycle len=" + std::to_string(len) + " chi=" + std::to_string(r.chi));
    }
    for (int k = 2; k <= 6; ++k) {
        ChiResult r = chromatic_number(gen_bidirected_complete(k));
        if (r.status != SolveStatus::Found || r.chi != k)
            return fail("bidirected complete k=" + std::to_string(k) + " chi=" + std::to_string(r.chi));
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 2
// The Fano digraph: digon-free, 3-regular, degree geometric maximum exactly
// 3 (integer product test), exact coloring number 3.
std::string fano_profile() {
    Digraph d = gen_fano(0);
    if (!find_digons(d).empty()) return fail("expected no digons");
    DegreeProfile p = degree_profile(d);
    for (int v = 0; v < 7; ++v)
        if (p.out_degrees[v] != 3 || p.in_degrees[v] != 3)
            return fail("vertex " + std::to_string(v) + " is not 3-regular");
    if (p.max_degree_product != 9) return fail("max degree product != 9");
    if (p.degree_geo_ceil != 3) return fail("degree geometric ceiling != 3");
    ChiResult r = chromatic_number(d);
    if (r.status != SolveStatus::Found || r.chi != 3)
        return fail("chi=" + std::to_string(r.chi) + " (expected 3)");
    return kPass;
}

// ---------------------------------------------------------------- criterion 3
// 7-vertex regular tournaments: exactly 3 isomorphism classes, at least two
// of them need 3 colors, Fano's class among those, and the class/automorphism
// counts reproduce the labeled enumeration.
std::string regular_tournament_classes() {
    std::vector<Digraph> classes = enumerate_small_vec(7, GraphFamily::RegularTournaments);
    if (classes.size() != 3) return fail("class count " + std::to_string(classes.size()) + " != 3");

    unsigned __int128 fano_form = canonical_form(gen_fano(0));
    int chi3 = 0;
    bool fano_seen = false, fano_needs_three = false;
    long long labeled_sum = 0;
    const long long factorial7 = 5040;
    for (const Digraph& d : classes) {
        int chi = chromatic_number(d).chi;
        if (chi == 3) ++chi3;
        if (adjacency_bits(d) == fano_form) {
            fano_seen = true;
            fano_needs_three = (chi == 3);
        }
        labeled_sum += factorial7 / automorphism_count(d);
    }
    if (chi3 < 2) return fail("only " + std::to_string(chi3) + " classes need 3 colors");
    if (!fano_seen) return fail("Fano's class missing from the enumeration");
    if (!fano_needs_three) return fail("Fano's class did not need 3 colors");
    long long labeled = count_labeled(7, GraphFamily::RegularTournaments);
    if (labeled_sum != labeled)
        return fail("labeled crosscheck " + std::to_string(labeled_sum) + " != " + std::to_string(labeled));
    return kPass;
}

// ---------------------------------------------------------------- criterion 4
// 1000 seeded random 9-vertex tournaments: degree geometric ceiling exactly
// 4 by the integer product test, and 3 colors always suffice.
std::string nine_vertex_samples() {
    const int samples = 1000;
    for (int s = 0; s < samples; ++s) {
        Digraph d = gen_random_tournament(9, 4000 + s);
        DegreeProfile p = degree_profile(d);
        if (p.degree_geo_ceil != 4)
            return fail("seed " + std::to_string(4000 + s) + ": ceiling " +
                        std::to_string(p.degree_geo_ceil) + " != 4");
        SolveResult r = is_k_colorable(d, 3);
        if (r.status != SolveStatus::Found)
            return fail("seed " + std::to_string(4000 + s) + ": not 3-colorable");
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 5
// Greedy bound: 200 random digraphs, n <= 60, mixed densities; the smaller
// of the out-/in-side greedy palettes never exceeds min(max out-degree,
// max in-degree) + 1 and the coloring is always proper. Zero tolerance.
std::string greedy_bound() {
    const int densities[] = {5, 10, 20, 35, 50, 75};
    for (int t = 0; t < 200; ++t) {
        int n = 4 + (t * 7) % 57;  // 4..60
        int pct = densities[t % 6];
        Digraph d = testutil::random_digraph(n, pct, 5000 + t);
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        PartialColoring c = greedy_color_min(d, order);
        DegreeProfile p = degree_profile(d);
        int bound = std::min(p.max_out_degree, p.max_in_degree) + 1;
        if (!c.is_total()) return fail("trial " + std::to_string(t) + ": coloring not total");
        if (c.palette_size > bound)
            return fail("trial " + std::to_string(t) + ": palette " +
                        std::to_string(c.palette_size) + " > bound " + std::to_string(bound));
        if (!validate_coloring(d, c).valid)
            return fail("trial " + std::to_string(t) + ": coloring invalid");
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 6
// Peeling: 200 random instances (digons allowed); the residual degree
// geometric ceiling strictly decreases every round while positive, and the
// total palette is at most the starting ceiling + 1. Zero tolerance.
std::string peeling_rounds() {
    const int densities[] = {10, 25, 45, 70};
    for (int t = 0; t < 200; ++t) {
        int n = 3 + (t * 5) % 38;  // 3..40
        Digraph d = testutil::random_digraph(n, densities[t % 4], 6000 + t);
        PeelResult r = peel_color(d);
        for (size_t i = 1; i < r.round_ceilings.size(); ++i)
            if (r.round_ceilings[i - 1] >= 1 && r.round_ceilings[i] >= r.round_ceilings[i - 1])
                return fail("trial " + std::to_string(t) + ": ceiling did not drop at round " +
                            std::to_string(i));
        if (!r.coloring.is_total()) return fail("trial " + std::to_string(t) + ": not total");
        if (!validate_coloring(d, r.coloring).valid)
            return fail("trial " + std::to_string(t) + ": invalid coloring");
        if (!r.round_ceilings.empty() &&
            r.coloring.palette_size > r.round_ceilings.front() + 1)
            return fail("trial " + std::to_string(t) + ": palette " +
                        std::to_string(r.coloring.palette_size) + " > ceiling+1");
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 7
// Randomized-pipeline invariants on regular digon-free digraphs with
// degrees 10, 30, 50:
//   (a) 510 seeded trials: the uncolor phase always leaves a proper partial
//       coloring and the per-vertex identity x = at - del holds exactly;
//   (b) recoloring a vertex u never changes the retention statistics of any
//       vertex whose underlying distance from u exceeds 3 (so in particular
//       of any vertex at directed distance >= 4 in both orientations), on
//       instances large enough that such vertices exist;
//   (c) a measurement run (n=2000, degree 50, palette 25) completes with a
//       proper coloring and byte-identical per-round statistics on re-run.
// Zero tolerance throughout.

std::vector<char> underlying_ball(const Digraph& d, int source, int radius) {
    std::vector<char> in_ball(d.vertex_count(), 0);
    std::vector<int> frontier{source};
    in_ball[source] = 1;
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int w : d.out_neighbors(u))
                if (!in_ball[w]) {
                    in_ball[w] = 1;
                    next.push_back(w);
                }
            for (int w : d.in_neighbors(u))
                if (!in_ball[w]) {
                    in_ball[w] = 1;
                    next.push_back(w);
                }
        }
        frontier.swap(next);
    }
    return in_ball;
}

std::string pipeline_invariants() {
    const int degrees[] = {10, 30, 50};
    // (a) validity and the counting identity.
    for (int di = 0; di < 3; ++di) {
        int delta = degrees[di];
        int n = 4 * delta;
        for (int s = 0; s < 170; ++s) {
            uint64_t seed = 7000 + 1000 * di + s;
            Digraph d = gen_random_regular_digonfree(n, delta, seed);
            PartialColoring assignment = random_phase(d, delta / 2, seed);
            PartialColoring partial = uncolor_phase(d, assignment);
            if (!validate_coloring(d, partial).valid)
                return fail("delta=" + std::to_string(delta) + " seed=" + std::to_string(seed) +
                            ": partial coloring invalid");
            double threshold = std::exp(-11.0) * delta / 2.0 + 1.0;
            PhaseStats st = compute_stats(d, assignment, partial, threshold);
            for (int v = 0; v < n; ++v)
                if (st.x[v] != st.at[v] - st.del[v])
                    return fail("identity violated at v=" + std::to_string(v));
        }
    }

    // (b) locality of the statistics: perturb vertex 0, compare outside its
    // radius-3 underlying ball. Instance sizes exceed the worst-case ball
    // (1 + B + B^2 + B^3 with B = 2*delta), so far vertices always exist.
    struct LocalityPlan {
        int delta, n, trials;
    };
    const LocalityPlan plans[] = {{10, 9000, 40}, {30, 220000, 4}, {50, 1050000, 2}};
    for (const LocalityPlan& plan : plans) {
        for (int t = 0; t < plan.trials; ++t) {
            uint64_t seed = 8000 + 100 * plan.delta + t;
            Digraph d = gen_random_regular_digonfree(plan.n, plan.delta, seed);
            int palette = plan.delta / 2;
            PartialColoring base = random_phase(d, palette, seed);
            PartialColoring perturbed = base;
            perturbed.colors[0] = (base.colors[0] + 1) % palette;

            std::vector<char> ball = underlying_ball(d, 0, 3);
            long long outside = 0;
            for (char b : ball)
                if (!b) ++outside;
            if (outside == 0)
                return fail("delta=" + std::to_string(plan.delta) +
                            ": no vertex beyond distance 3; instance too small");

            PhaseStats sa = compute_stats(d, base, uncolor_phase(d, base), 1.0);
            PhaseStats sb = compute_stats(d, perturbed, uncolor_phase(d, perturbed), 1.0);
            for (int v = 0; v < plan.n; ++v) {
                if (ball[v]) continue;
                if (sa.x[v] != sb.x[v] || sa.at[v] != sb.at[v] || sa.del[v] != sb.del[v])
                    return fail("delta=" + std::to_string(plan.delta) + " trial=" +
                                std::to_string(t) + ": statistics changed at far vertex " +
                                std::to_string(v));
            }
        }
    }

    // (c) deterministic measurement run.
    {
        Digraph d = gen_random_regular_digonfree(2000, 50, 909);
        LLLParams params;
        params.palette = 25;
        params.max_rounds = 3;
        params.seed = 909;
        LLLResult a = lll_color(d, params);
        LLLResult b = lll_color(d, params);
        if (!a.coloring.is_total() || !validate_coloring(d, a.coloring).valid)
            return fail("measurement run produced an invalid coloring");
        if (a.rounds.size() != b.rounds.size()) return fail("round counts differ between reruns");
        for (size_t i = 0; i < a.rounds.size(); ++i) {
            if (a.rounds[i].failed != b.rounds[i].failed || a.rounds[i].min_x != b.rounds[i].min_x ||
                a.rounds[i].mean_x != b.rounds[i].mean_x)
                return fail("round statistics differ between reruns at round " + std::to_string(i + 1));
        }
        if (a.coloring.colors != b.coloring.colors) return fail("colorings differ between reruns");
        std::printf("      measurement n=2000 delta=50 palette=25: rounds=%zu first_mean_x=%.6f "
                    "outcome=%s palette_used=%d\n",
                    a.rounds.size(), a.rounds.empty() ? 0.0 : a.rounds[0].mean_x,
                    a.outcome == LLLOutcome::Completed ? "completed" : "fallback",
                    a.coloring.palette_size);
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 8
// The branch-and-bound solver agrees with the independent brute-force
// oracle on 100 random digraphs with n <= 7. Zero tolerance.
std::string oracle_agreement() {
    const int densities[] = {10, 25, 40, 60, 85};
    for (int t = 0; t < 100; ++t) {
        int n = 3 + t % 5;  // 3..7
        Digraph d = testutil::random_digraph(n, densities[t % 5], 9000 + t);
        int fast = chromatic_number(d).chi;
        int oracle = brute_force_chi(d);
        if (fast != oracle)
            return fail("trial " + std::to_string(t) + ": solver " + std::to_string(fast) +
                        " != oracle " + std::to_string(oracle));
    }
    return kPass;
}

// ---------------------------------------------------------------- criterion 9
// Every connected digon-free digraph with n <= 5 and degree geometric
// maximum above 1 (isomorphism-free sweep) is choosable with lists of size
// equal to the degree geometric ceiling. Zero counterexamples.
std::string choosability_sweep() {
    std::string verdict = kPass;
    long long digraphs = 0, assignments = 0;
    for (int n = 2; n <= 5 && verdict.empty(); ++n) {
        enumerate_small(n, GraphFamily::DigonFree, [&](const Digraph& d) {
            if (!is_weakly_connected(d)) return true;
            DegreeProfile p = degree_profile(d);
            if (p.max_degree_product <= 1) return true;
            ++digraphs;
            int k = p.degree_geo_ceil;
            ChoosableResult r = choosable_bound_check(d, k, d.vertex_count() * k);
            assignments += r.assignments_checked;
            if (r.status != ChoosableStatus::Choosable) {
                verdict = "counterexample on a digraph with n=" +
                          std::to_string(d.vertex_count());
                return false;
            }
            return true;
        });
    }
    if (verdict.empty())
        std::printf("      swept %lld digraphs, %lld list assignments\n", digraphs, assignments);
    return verdict;
}

// --------------------------------------------------------------- criterion 10
// Screening contrapositive: over every connected Eulerian digraph with
// n <= 5 and every list assignment with |L(v)| = d+(v) drawn from a
// 4-color universe, candidate=false implies an L-coloring exists. (With
// tight lists the screening hypothesis forces d+(v) = d-(v) at every
// vertex, so non-Eulerian inputs admit no qualifying assignment.) Zero
// tolerance.
std::string screening_contrapositive() {
    std::string verdict = kPass;
    long long checked = 0, candidates = 0;
    for (int n = 2; n <= 5 && verdict.empty(); ++n) {
        enumerate_small(n, GraphFamily::AllDigraphs, [&](const Digraph& d) {
            if (!is_weakly_connected(d) || !is_eulerian(d).eulerian) return true;
            DegreeProfile prof = degree_profile(d);
            int nn = d.vertex_count();
            std::vector<std::vector<std::vector<int>>> options(nn);
            for (int v = 0; v < nn; ++v) {
                int k = prof.out_degrees[v];
                for (int mask = 0; mask < 16; ++mask) {
                    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
                    std::vector<int> list;
                    for (int c = 0; c < 4; ++c)
                        if (mask & (1 << c)) list.push_back(c);
                    options[v].push_back(std::move(list));
                }
            }
            std::vector<int> idx(nn, 0);
            while (true) {
                ListAssignment lists;
                lists.universe = 4;
                lists.lists.resize(nn);
                for (int v = 0; v < nn; ++v) lists.lists[v] = options[v][idx[v]];
                ++checked;
                GallaiCandidate g = gallai_candidate(d, lists);
                if (g.candidate) {
                    ++candidates;
                } else if (list_colorable(d, lists).status != SolveStatus::Found) {
                    verdict = "screened-out assignment with no coloring on a digraph with n=" +
                              std::to_string(nn);
                    return false;
                }
                int v = nn - 1;
                while (v >= 0 && idx[v] + 1 == static_cast<int>(options[v].size())) idx[v--] = 0;
                if (v < 0) break;
                ++idx[v];
            }
            return true;
        });
    }
    if (verdict.empty())
        std::printf("      checked %lld tight assignments (%lld screened as candidates)\n",
                    checked, candidates);
    return verdict;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "obstruction families have exact coloring numbers", obstruction_regression},
        {2, "Fano digraph profile and coloring number", fano_profile},
        {3, "7-vertex regular tournament classes", regular_tournament_classes},
        {4, "9-vertex tournaments: ceiling 4, three colors", nine_vertex_samples},
        {5, "greedy palette within min-degree bound (200 trials)", greedy_bound},
        {6, "peeling ceilings strictly decrease (200 trials)", peeling_rounds},
        {7, "randomized pipeline invariants and locality", pipeline_invariants},
        {8, "solver agrees with brute-force oracle (100 trials)", oracle_agreement},
        {9, "degree-ceiling choosability sweep (n <= 5)", choosability_sweep},
        {10, "tight-list screening contrapositive (n <= 5)", screening_contrapositive},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = Clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (detail.empty()) {
            std::printf("PASS  %2d  %s (%.0f ms)\n", c.number, c.name.c_str(), ms);
        } else {
            ++failures;
            std::printf("FAIL  %2d  %s (%.0f ms): %s\n", c.number, c.name.c_str(), ms,
                        detail.c_str());
        }
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures;
}
