#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dicolor/coloring_types.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

/// Parameters of the randomized coloring pipeline. Optional fields default
/// to functions of the input's maximum degree geometric mean g = sqrt(max
/// over v of d+(v) * d-(v)): palette floor(g/2) (at least 1), retention
/// threshold e^-11 * g/2 + 1, final palette floor((1 - e^-13) * g).
struct LLLParams {
    double c1 = 1.0 - std::exp(-11.0) / 3.0;  // lower degree-window factor
    double c2 = 1.0 + std::exp(-11.0) / 3.0;  // upper degree-window factor
    std::optional<int> palette;               // colors in the random phase
    std::optional<double> retention;          // per-vertex success threshold
    std::optional<int> final_palette;         // palette of the finished coloring
    int max_rounds = 100;                     // resampling round cap
    uint64_t seed = 0;
};

/// Vertices surviving the degree-window trim, plus the removal order needed
/// to reinsert the others later.
struct TrimResult {
    std::vector<int> core;     // surviving ids, ascending
    std::vector<int> removed;  // ids in removal order
};

/// Iteratively removes (ascending id per sweep, removal effective
/// immediately) every vertex whose residual out- or in-degree leaves the
/// open window (c1 * g, c2 * g), where g is fixed from the input digraph;
/// sweeps repeat until none is removed. Throws std::invalid_argument unless
/// 0 < c1 <= 1 <= c2.
TrimResult trim_degree_window(const Digraph& d, double c1, double c2);

/// Total coloring with every vertex drawn independently and uniformly from
/// {0, ..., palette-1}, in ascending vertex order from the given stream.
PartialColoring random_phase(const Digraph& d, int palette, std::mt19937_64& rng);
PartialColoring random_phase(const Digraph& d, int palette, uint64_t seed);

/// Uncolors exactly the vertices lying on some monochromatic directed path
/// with two arcs. Locally: with M the spanning subdigraph of the arcs whose
/// endpoints share a color, v is uncolored iff it has positive in- and
/// out-degree in M, or an M-out-neighbor with positive M-out-degree, or an
/// M-in-neighbor with positive M-in-degree. On digon-free inputs the result
/// is always a proper partial coloring: every directed cycle of length >= 3
/// inside a color class contains such a path, so no class keeps a cycle.
/// Throws std::invalid_argument unless `assignment` is total.
PartialColoring uncolor_phase(const Digraph& d, const PartialColoring& assignment);

/// Per-vertex retention statistics of one random-then-uncolor step. For a
/// vertex v and color i, O_i is the set of out-neighbors of v that were
/// assigned i. Counting colors with |O_i| >= 2: at_v counts them all, del_v
/// those that lost at least one member to the uncolor step, x_v those whose
/// members were all retained.
struct PhaseStats {
    std::vector<int> at, del, x;
    /// Per vertex, (color, |O_i|) pairs for colors on >= 1 out-neighbor,
    /// ascending by color. Filled only when requested.
    std::vector<std::vector<std::pair<int, int>>> multiplicities;
    int min_x = 0;       // 0 for an empty digraph
    double mean_x = 0.0;
    int failed = 0;      // vertices with x_v < threshold
    double threshold = 0.0;
};

/// Computes PhaseStats for `partial` = uncolor_phase(d, assignment), which
/// the caller guarantees. at, del and x are accumulated by independent
/// scans and the identity x = at - del is checked per vertex (logic_error
/// on mismatch, which would indicate a defect, not bad input).
PhaseStats compute_stats(const Digraph& d, const PartialColoring& assignment,
                         const PartialColoring& partial, double threshold,
                         bool with_multiplicities = false);

enum class LLLOutcome { Completed, Fallback };
enum class FallbackReason { None, RoundCap, ExtensionFailed, ReinsertionFailed };

struct LLLRound {
    int round = 0;  // 1-based
    int failed = 0;
    int min_x = 0;
    double mean_x = 0.0;
};

struct LLLResult {
    LLLOutcome outcome = LLLOutcome::Completed;
    FallbackReason reason = FallbackReason::None;
    /// Total proper coloring; palette is the configured final palette when
    /// completed, or the greedy fallback palette otherwise.
    PartialColoring coloring;
    std::vector<LLLRound> rounds;
    PhaseStats last_stats;     // of the final measured round (empty if none ran)
    // Resolved parameters and trim outcome, for reporting.
    int palette = 0;
    double retention = 0.0;
    int final_palette = 0;
    double degree_geo = 0.0;
    int core_size = 0;
    int removed_count = 0;
};

/// Randomized coloring pipeline: trim the degree window; repeatedly draw
/// uniform colors on the core, uncolor monochromatic 2-arc paths, and, when
/// any vertex retains fewer than `retention` repeated colors, redraw every
/// vertex within three arcs of a failing one (following arcs in either
/// direction — exactly the set whose colors its statistic can depend on);
/// after a clean round, greedily extend the retained partial coloring to
/// the rest of the core using the final palette, then reinsert the trimmed
/// vertices in reverse removal order, each taking the smallest final-palette
/// color absent from its colored out-neighbors, or failing that from its
/// colored in-neighbors. Either choice leaves every class acyclic. If the
/// round cap is exhausted, or the extension or a reinsertion runs out of
/// colors, the result is instead a greedy coloring of the whole input (both
/// sides, smaller palette) with the reason recorded.
///
/// Throws std::invalid_argument when the input has a digon, when the
/// resolved final palette is below 1, when the resolved palette exceeds the
/// final palette, or when parameters violate 0 < c1 <= 1 <= c2, palette >=
/// 1, retention >= 0, max_rounds >= 1.
LLLResult lll_color(const Digraph& d, const LLLParams& params = {});

}  // namespace dicolor
