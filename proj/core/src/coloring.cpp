#include "dicolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dicolor {

namespace {

void check_permutation(const std::vector<int>& order, const std::vector<uint8_t>& expected,
                       const char* what) {
    std::vector<uint8_t> seen(expected.size(), 0);
    size_t expected_count = 0;
    for (uint8_t e : expected) expected_count += e;
    if (order.size() != expected_count)
        throw std::invalid_argument(std::string(what) + ": order has wrong length");
    for (int v : order) {
        if (v < 0 || v >= static_cast<int>(expected.size()) || !expected[v] || seen[v])
            throw std::invalid_argument(std::string(what) + ": order is not a permutation of the " +
                                        "expected vertex set");
        seen[v] = 1;
    }
}

} // namespace

ColoringCheck validate_coloring(const Digraph& d, const PartialColoring& coloring) {
    if (coloring.size() != d.vertex_count())
        throw std::invalid_argument("coloring size does not match vertex count");
    int max_used = -1;
    for (int c : coloring.colors) {
        if (c != PartialColoring::kUncolored && c < 0)
            throw std::invalid_argument("negative color");
        max_used = std::max(max_used, c);
    }
    if (max_used >= coloring.palette_size)
        throw std::invalid_argument("color " + std::to_string(max_used) +
                                    " outside palette of size " +
                                    std::to_string(coloring.palette_size));

    std::vector<std::vector<int>> classes(max_used + 1);
    for (int v = 0; v < coloring.size(); ++v)
        if (coloring.is_colored(v)) classes[coloring.colors[v]].push_back(v);

    ColoringCheck res;
    for (int c = 0; c <= max_used; ++c) {
        AcyclicityCheck a = is_acyclic_subset(d, classes[c]);
        if (!a.acyclic) {
            res.valid = false;
            res.bad_color = c;
            res.cycle = std::move(a.cycle);
            return res;
        }
    }
    return res;
}

PartialColoring greedy_color(const Digraph& d, const std::vector<int>& order, GreedySide side) {
    int n = d.vertex_count();
    check_permutation(order, std::vector<uint8_t>(n, 1), "greedy_color");

    PartialColoring pc(n, 0);
    std::vector<int> taken(n + 1, -1);  // taken[c] == v: color c seen at v's turn
    int max_used = -1;
    for (int v : order) {
        auto nbrs = side == GreedySide::Out ? d.out_neighbors(v) : d.in_neighbors(v);
        for (int32_t w : nbrs) {
            int c = pc.colors[w];
            if (c != PartialColoring::kUncolored) taken[c] = v;
        }
        int color = 0;
        while (taken[color] == v) ++color;
        pc.colors[v] = color;
        max_used = std::max(max_used, color);
    }
    pc.palette_size = max_used + 1;
    return pc;
}

PartialColoring greedy_color_min(const Digraph& d, const std::vector<int>& order) {
    PartialColoring out = greedy_color(d, order, GreedySide::Out);
    PartialColoring in = greedy_color(d, order, GreedySide::In);
    return in.palette_size < out.palette_size ? in : out;
}

std::vector<int> ascending_order(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
}

ExtendResult extend_partial(const Digraph& d, const PartialColoring& partial,
                            const std::vector<int>& order) {
    int n = d.vertex_count();
    if (partial.size() != n)
        throw std::invalid_argument("extend_partial: coloring size does not match vertex count");
    std::vector<uint8_t> uncolored(n, 0);
    for (int v = 0; v < n; ++v) uncolored[v] = !partial.is_colored(v);
    check_permutation(order, uncolored, "extend_partial");
    ColoringCheck pre = validate_coloring(d, partial);
    if (!pre.valid)
        throw std::invalid_argument("extend_partial: input coloring is not proper");

    ExtendResult res;
    res.coloring = partial;
    int palette = partial.palette_size;
    std::vector<int> taken(palette + 1, -1);
    for (int v : order) {
        for (int32_t w : d.out_neighbors(v)) {
            int c = res.coloring.colors[w];
            if (c != PartialColoring::kUncolored) taken[c] = v;
        }
        int color = 0;
        while (color < palette && taken[color] == v) ++color;
        if (color == palette) {
            res.success = false;
            res.failed_vertex = v;
            return res;
        }
        res.coloring.colors[v] = color;
    }
    return res;
}

PeelResult peel_color(const Digraph& d) {
    int n = d.vertex_count();
    PeelResult res;
    res.coloring = PartialColoring(n, 0);

    std::vector<int> alive;
    for (int v = 0; v < n; ++v) alive.push_back(v);
    int round = 0;
    while (!alive.empty()) {
        InducedSubdigraph sub = induced_subdigraph(d, alive);
        res.round_ceilings.push_back(degree_profile(sub.graph).degree_geo_ceil);

        // Greedy maximal acyclic subset of the residual, ascending ids:
        // keep v when the class stays acyclic with v added.
        std::vector<int> cls;
        std::vector<int> rest;
        for (int v : alive) {
            cls.push_back(v);
            if (!is_acyclic_subset(d, cls).acyclic) {
                cls.pop_back();
                rest.push_back(v);
            }
        }
        for (int v : cls) res.coloring.colors[v] = round;
        alive = std::move(rest);
        ++round;
    }
    res.coloring.palette_size = round;
    return res;
}

} // namespace dicolor
