#pragma once

#include <vector>

namespace dicolor {

/// Assignment of colors 0..palette_size-1 to a subset of the vertices;
/// kUncolored marks the rest. A coloring is proper when every color class
/// induces an acyclic subdigraph.
struct PartialColoring {
    static constexpr int kUncolored = -1;

    std::vector<int> colors;
    int palette_size = 0;

    PartialColoring() = default;
    PartialColoring(int n, int palette) : colors(n, kUncolored), palette_size(palette) {}

    int size() const { return static_cast<int>(colors.size()); }
    bool is_colored(int v) const { return colors[v] != kUncolored; }

    bool is_total() const {
        for (int c : colors)
            if (c == kUncolored) return false;
        return true;
    }

    int colored_count() const {
        int k = 0;
        for (int c : colors)
            if (c != kUncolored) ++k;
        return k;
    }
};

/// Per-vertex color lists over the universe 0..universe-1. Valid when every
/// list is nonempty, sorted ascending, duplicate-free, and within range.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
    int universe = 0;

    int size() const { return static_cast<int>(lists.size()); }
};

/// Throws std::invalid_argument unless `lists` is valid for a digraph on
/// lists.size() vertices.
void validate_lists(const ListAssignment& lists);

} // namespace dicolor
