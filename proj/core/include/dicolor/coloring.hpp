#pragma once

#include <vector>

#include "dicolor/coloring_types.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

struct ColoringCheck {
    bool valid = true;
    int bad_color = -1;          // smallest color class that is cyclic
    std::vector<int> cycle;      // witness cycle inside that class
};

/// A coloring is proper when every color class induces an acyclic
/// subdigraph; uncolored vertices are ignored. Classes are checked in
/// ascending color order and the first cyclic one is reported. Throws
/// std::invalid_argument if an assigned color is outside the palette.
ColoringCheck validate_coloring(const Digraph& d, const PartialColoring& coloring);

enum class GreedySide { Out, In };

/// Colors the vertices in `order` (a permutation of all vertices), giving
/// each the smallest color not used by its already-colored out-neighbors
/// (side Out) or in-neighbors (side In). Uses at most max-side-degree + 1
/// colors; the reported palette is the number of colors actually used.
PartialColoring greedy_color(const Digraph& d, const std::vector<int>& order, GreedySide side);

/// Runs greedy_color on both sides with the same order and keeps the
/// coloring with the smaller palette (Out on a tie).
PartialColoring greedy_color_min(const Digraph& d, const std::vector<int>& order);

/// Ascending-id order, the default everywhere.
std::vector<int> ascending_order(int n);

struct ExtendResult {
    bool success = true;
    PartialColoring coloring;
    int failed_vertex = -1;      // first vertex whose palette was exhausted
};

/// Extends a proper partial coloring to the uncolored vertices in `order`
/// (a permutation of exactly the uncolored vertices), keeping the palette
/// fixed and never recoloring. Each vertex gets the smallest palette color
/// absent from its currently-colored out-neighbors; if every palette color
/// is taken, the extension stops and reports that vertex.
ExtendResult extend_partial(const Digraph& d, const PartialColoring& partial,
                            const std::vector<int>& order);

struct PeelResult {
    PartialColoring coloring;    // total; palette = number of rounds
    /// degree_geo_ceil of the residual digraph at the start of each round.
    std::vector<int> round_ceilings;
};

/// Repeatedly extracts a maximal acyclic vertex set (greedily, ascending
/// ids) as the next color class until nothing remains. The ceiling of the
/// residual degree geometric mean drops by at least one per round, so at
/// most degree_geo_ceil + 1 colors are used.
PeelResult peel_color(const Digraph& d);

} // namespace dicolor
