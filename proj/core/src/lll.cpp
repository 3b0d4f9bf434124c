#include "dicolor/lll.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "dicolor/coloring.hpp"
#include "dicolor/generators.hpp"

namespace dicolor {

namespace {

void check_window_factors(double c1, double c2) {
    if (!(c1 > 0.0) || !(c1 <= 1.0) || !(c2 >= 1.0))
        throw std::invalid_argument("degree window needs 0 < c1 <= 1 <= c2");
}

}  // namespace

TrimResult trim_degree_window(const Digraph& d, double c1, double c2) {
    check_window_factors(c1, c2);
    int n = d.vertex_count();
    DegreeProfile profile = degree_profile(d);
    const double lo = c1 * profile.degree_geo_max;
    const double hi = c2 * profile.degree_geo_max;

    std::vector<int> out_deg = profile.out_degrees;
    std::vector<int> in_deg = profile.in_degrees;
    std::vector<char> alive(n, 1);
    TrimResult result;

    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (out_deg[v] > lo && out_deg[v] < hi && in_deg[v] > lo && in_deg[v] < hi)
                continue;
            alive[v] = 0;
            result.removed.push_back(v);
            removed_any = true;
            for (int w : d.out_neighbors(v))
                if (alive[w]) --in_deg[w];
            for (int w : d.in_neighbors(v))
                if (alive[w]) --out_deg[w];
        }
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) result.core.push_back(v);
    return result;
}

PartialColoring random_phase(const Digraph& d, int palette, std::mt19937_64& rng) {
    if (palette < 1) throw std::invalid_argument("random_phase: palette must be at least 1");
    int n = d.vertex_count();
    PartialColoring coloring(n, palette);
    for (int v = 0; v < n; ++v)
        coloring.colors[v] = static_cast<int>(uniform_below(rng, palette));
    return coloring;
}

PartialColoring random_phase(const Digraph& d, int palette, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_phase(d, palette, rng);
}

PartialColoring uncolor_phase(const Digraph& d, const PartialColoring& assignment) {
    int n = d.vertex_count();
    if (assignment.size() != n || !assignment.is_total())
        throw std::invalid_argument("uncolor_phase: assignment must be total");
    const std::vector<int>& color = assignment.colors;

    // Degrees in the subdigraph M of monochromatic arcs.
    std::vector<int> m_out(n, 0), m_in(n, 0);
    d.for_each_arc([&](int u, int v) {
        if (color[u] == color[v]) {
            ++m_out[u];
            ++m_in[v];
        }
    });

    PartialColoring result = assignment;
    for (int v = 0; v < n; ++v) {
        bool on_path = m_out[v] > 0 && m_in[v] > 0;  // middle of a 2-arc path
        if (!on_path)
            for (int w : d.out_neighbors(v))
                if (color[w] == color[v] && m_out[w] > 0) {  // start of one
                    on_path = true;
                    break;
                }
        if (!on_path)
            for (int u : d.in_neighbors(v))
                if (color[u] == color[v] && m_in[u] > 0) {  // end of one
                    on_path = true;
                    break;
                }
        if (on_path) result.colors[v] = PartialColoring::kUncolored;
    }
    return result;
}

PhaseStats compute_stats(const Digraph& d, const PartialColoring& assignment,
                         const PartialColoring& partial, double threshold,
                         bool with_multiplicities) {
    int n = d.vertex_count();
    if (assignment.size() != n || !assignment.is_total())
        throw std::invalid_argument("compute_stats: assignment must be total");
    if (partial.size() != n)
        throw std::invalid_argument("compute_stats: partial coloring has wrong size");

    PhaseStats stats;
    stats.threshold = threshold;
    stats.at.assign(n, 0);
    stats.del.assign(n, 0);
    stats.x.assign(n, 0);
    if (with_multiplicities) stats.multiplicities.resize(n);

    int palette = assignment.palette_size;
    std::vector<int> count(palette, 0);     // |O_i| from the assignment
    std::vector<int> retained(palette, 0);  // members of O_i still colored
    std::vector<int> lost(palette, 0);      // members of O_i uncolored
    std::vector<int> touched;

    long long x_sum = 0;
    for (int v = 0; v < n; ++v) {
        touched.clear();
        for (int w : d.out_neighbors(v)) {
            int c = assignment.colors[w];
            if (count[c] == 0) touched.push_back(c);
            ++count[c];
        }
        // Second, independent scan against the partial coloring.
        for (int w : d.out_neighbors(v)) {
            int c = assignment.colors[w];
            if (partial.is_colored(w))
                ++retained[c];
            else
                ++lost[c];
        }
        int at = 0, del = 0, x = 0;
        for (int c : touched) {
            if (count[c] >= 2) {
                ++at;
                if (lost[c] >= 1) ++del;
                if (retained[c] == count[c]) ++x;
            }
        }
        if (x != at - del)
            throw std::logic_error("compute_stats: retention identity violated");
        stats.at[v] = at;
        stats.del[v] = del;
        stats.x[v] = x;
        x_sum += x;
        if (with_multiplicities) {
            std::sort(touched.begin(), touched.end());
            auto& row = stats.multiplicities[v];
            row.reserve(touched.size());
            for (int c : touched) row.emplace_back(c, count[c]);
        }
        for (int c : touched) count[c] = retained[c] = lost[c] = 0;
    }

    if (n > 0) {
        stats.min_x = *std::min_element(stats.x.begin(), stats.x.end());
        stats.mean_x = static_cast<double>(x_sum) / n;
        for (int v = 0; v < n; ++v)
            if (stats.x[v] < threshold) ++stats.failed;
    }
    return stats;
}

namespace {

// Redraws the colors of every vertex within (undirected) distance 3 of a
// vertex with x below the threshold, via one multi-source BFS. Drawing is
// in ascending vertex order so the stream consumption is deterministic.
void resample_failed_balls(const Digraph& d, const std::vector<int>& x, double threshold,
                           PartialColoring& assignment, std::mt19937_64& rng) {
    int n = d.vertex_count();
    std::vector<char> in_ball(n, 0);
    std::vector<int> frontier, next;
    for (int v = 0; v < n; ++v)
        if (x[v] < threshold) {
            in_ball[v] = 1;
            frontier.push_back(v);
        }
    for (int depth = 0; depth < 3 && !frontier.empty(); ++depth) {
        next.clear();
        for (int u : frontier) {
            auto grow = [&](int w) {
                if (!in_ball[w]) {
                    in_ball[w] = 1;
                    next.push_back(w);
                }
            };
            for (int w : d.out_neighbors(u)) grow(w);
            for (int w : d.in_neighbors(u)) grow(w);
        }
        frontier.swap(next);
    }
    for (int v = 0; v < n; ++v)
        if (in_ball[v])
            assignment.colors[v] = static_cast<int>(uniform_below(rng, assignment.palette_size));
}

LLLResult& to_fallback(LLLResult& result, const Digraph& d, FallbackReason reason) {
    result.outcome = LLLOutcome::Fallback;
    result.reason = reason;
    result.coloring = greedy_color_min(d, ascending_order(d.vertex_count()));
    return result;
}

// Smallest color below `palette` missing from the colored out-neighbors of
// v, or failing that from the colored in-neighbors; -1 when both sides are
// fully occupied. `taken`/`stamp` are reusable scratch.
int reinsertion_color(const Digraph& d, const PartialColoring& coloring, int v, int palette,
                      std::vector<int>& taken, int& stamp) {
    auto side = [&](auto neighbors) {
        ++stamp;
        for (int w : neighbors)
            if (coloring.is_colored(w) && coloring.colors[w] < palette)
                taken[coloring.colors[w]] = stamp;
        for (int c = 0; c < palette; ++c)
            if (taken[c] != stamp) return c;
        return -1;
    };
    int c = side(d.out_neighbors(v));
    if (c < 0) c = side(d.in_neighbors(v));
    return c;
}

}  // namespace

LLLResult lll_color(const Digraph& d, const LLLParams& params) {
    check_window_factors(params.c1, params.c2);
    if (params.max_rounds < 1)
        throw std::invalid_argument("lll_color: max_rounds must be at least 1");
    if (!find_digons(d).empty())
        throw std::invalid_argument("lll_color: input must be digon-free");

    LLLResult result;
    int n = d.vertex_count();
    if (n == 0) return result;

    DegreeProfile profile = degree_profile(d);
    double g = profile.degree_geo_max;
    result.degree_geo = g;

    // floor(g/2) equals floor(floor(g)/2), so the default palette is exact.
    int palette = params.palette
                      ? *params.palette
                      : static_cast<int>(std::max<long long>(1, integer_sqrt(profile.max_degree_product) / 2));
    double retention = params.retention ? *params.retention : std::exp(-11.0) * g / 2.0 + 1.0;
    int target = params.final_palette
                     ? *params.final_palette
                     : static_cast<int>(std::floor((1.0 - std::exp(-13.0)) * g));
    if (palette < 1) throw std::invalid_argument("lll_color: palette must be at least 1");
    if (retention < 0.0) throw std::invalid_argument("lll_color: retention must be nonnegative");
    if (target < 1) throw std::invalid_argument("lll_color: final palette must be at least 1");
    if (palette > target)
        throw std::invalid_argument("lll_color: palette exceeds the final palette");
    result.palette = palette;
    result.retention = retention;
    result.final_palette = target;

    TrimResult trim = trim_degree_window(d, params.c1, params.c2);
    result.core_size = static_cast<int>(trim.core.size());
    result.removed_count = static_cast<int>(trim.removed.size());
    InducedSubdigraph core = induced_subdigraph(d, trim.core);
    int core_n = core.graph.vertex_count();

    std::mt19937_64 rng(params.seed);

    PartialColoring kept;  // proper partial coloring of the core
    bool clean = core_n == 0;
    if (core_n > 0) {
        PartialColoring assignment = random_phase(core.graph, palette, rng);
        for (int round = 1; round <= params.max_rounds; ++round) {
            PartialColoring after = uncolor_phase(core.graph, assignment);
            PhaseStats stats = compute_stats(core.graph, assignment, after, retention);
            result.rounds.push_back({round, stats.failed, stats.min_x, stats.mean_x});
            bool done = stats.failed == 0;
            result.last_stats = std::move(stats);
            if (done) {
                clean = true;
                kept = std::move(after);
                break;
            }
            if (round < params.max_rounds)
                resample_failed_balls(core.graph, result.last_stats.x, retention, assignment,
                                      rng);
        }
    }
    if (!clean) return to_fallback(result, d, FallbackReason::RoundCap);

    // Complete the core at the final palette; retained colors already fit.
    kept.colors.resize(core_n, PartialColoring::kUncolored);
    kept.palette_size = target;
    std::vector<int> uncolored;
    for (int v = 0; v < core_n; ++v)
        if (!kept.is_colored(v)) uncolored.push_back(v);
    ExtendResult extended = extend_partial(core.graph, kept, uncolored);
    if (!extended.success) return to_fallback(result, d, FallbackReason::ExtensionFailed);

    PartialColoring full(n, target);
    for (int v = 0; v < core_n; ++v)
        full.colors[core.original_ids[v]] = extended.coloring.colors[v];

    std::vector<int> taken(target, -1);
    int stamp = 0;
    for (auto it = trim.removed.rbegin(); it != trim.removed.rend(); ++it) {
        int v = *it;
        int c = reinsertion_color(d, full, v, target, taken, stamp);
        if (c < 0) {
            // With fewer out- or in-neighbors than colors, one side always
            // has a free color; running out is only possible beyond that.
            if (std::min(d.out_degree(v), d.in_degree(v)) < target)
                throw std::logic_error("lll_color: reinsertion failed against its guarantee");
            return to_fallback(result, d, FallbackReason::ReinsertionFailed);
        }
        full.colors[v] = c;
    }

    ColoringCheck check = validate_coloring(d, full);
    if (!check.valid) throw std::logic_error("lll_color: produced an improper coloring");
    result.coloring = std::move(full);
    result.outcome = LLLOutcome::Completed;
    return result;
}

}  // namespace dicolor
