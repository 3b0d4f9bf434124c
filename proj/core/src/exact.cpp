#include "dicolor/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dicolor/errors.hpp"

namespace dicolor {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    uint64_t max_nodes;
    Clock::time_point deadline;
    bool has_deadline;
    uint64_t nodes = 0;
    bool exhausted = false;

    explicit Budget(const SolveLimits& limits)
        : max_nodes(limits.max_nodes),
          deadline(Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(std::min(limits.max_seconds, 1e9)))),
          has_deadline(limits.max_seconds < 1e9) {}

    // Returns false once the budget is gone.
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > max_nodes) { exhausted = true; return false; }
        if (has_deadline && (nodes & 0xFFF) == 0 && Clock::now() > deadline) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

// Shared backtracking over an explicit vertex order. candidate_colors(v)
// yields the colors to try. Class acyclicity is re-checked on insertion.
class ClassTracker {
public:
    ClassTracker(const Digraph& d, int palette) : d_(d), classes_(palette) {}

    bool try_insert(int v, int c) {
        classes_[c].push_back(v);
        if (class_acyclic(c)) return true;
        classes_[c].pop_back();
        return false;
    }

    void remove(int v, int c) {
        (void)v;
        classes_[c].pop_back();
    }

private:
    bool class_acyclic(int c) { return is_acyclic_subset(d_, classes_[c]).acyclic; }

    const Digraph& d_;
    std::vector<std::vector<int>> classes_;
};

std::vector<int> degree_descending_order(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d.out_degree(a) + d.in_degree(a) > d.out_degree(b) + d.in_degree(b);
    });
    return order;
}

} // namespace

SolveResult is_k_colorable(const Digraph& d, int k, const SolveLimits& limits) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: k must be nonnegative");
    int n = d.vertex_count();
    SolveResult res;
    if (n == 0) {
        res.status = SolveStatus::Found;
        res.coloring = PartialColoring(0, k);
        return res;
    }
    if (k == 0) return res;  // None
    if (k >= n) {
        // One vertex per class is always proper.
        res.status = SolveStatus::Found;
        res.coloring = PartialColoring(n, k);
        for (int v = 0; v < n; ++v) res.coloring.colors[v] = v;
        return res;
    }

    std::vector<int> order = degree_descending_order(d);
    Budget budget(limits);
    ClassTracker tracker(d, k);
    PartialColoring assignment(n, k);

    // pos: index into order; used: colors opened so far.
    struct Frame { int color; int used_before; };
    std::vector<Frame> trail(n);
    int pos = 0;
    int used = 0;
    int color = 0;
    while (true) {
        int v = order[pos];
        bool placed = false;
        int limit = std::min(k - 1, used);  // may open exactly one new color
        for (; color <= limit; ++color) {
            if (!budget.tick()) {
                res.status = SolveStatus::ResourceLimit;
                res.nodes = budget.nodes;
                return res;
            }
            if (tracker.try_insert(v, color)) { placed = true; break; }
        }
        if (placed) {
            trail[pos] = {color, used};
            assignment.colors[v] = color;
            used = std::max(used, color + 1);
            ++pos;
            color = 0;
            if (pos == n) {
                res.status = SolveStatus::Found;
                res.coloring = assignment;
                res.nodes = budget.nodes;
                return res;
            }
        } else {
            // Backtrack.
            if (pos == 0) {
                res.status = SolveStatus::None;
                res.nodes = budget.nodes;
                return res;
            }
            --pos;
            int u = order[pos];
            tracker.remove(u, trail[pos].color);
            assignment.colors[u] = PartialColoring::kUncolored;
            used = trail[pos].used_before;
            color = trail[pos].color + 1;
        }
    }
}

ChiResult chromatic_number(const Digraph& d, const SolveLimits& limits) {
    ChiResult res;
    int n = d.vertex_count();
    if (n == 0) {
        res.chi = 0;
        res.coloring = PartialColoring(0, 0);
        return res;
    }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    int k = is_acyclic_subset(d, all).acyclic ? 1 : 2;
    for (;; ++k) {
        SolveResult sub = is_k_colorable(d, k, limits);
        res.nodes += sub.nodes;
        if (sub.status == SolveStatus::ResourceLimit) {
            res.status = SolveStatus::ResourceLimit;
            res.chi = k;  // search stopped while testing this k
            return res;
        }
        if (sub.status == SolveStatus::Found) {
            res.status = SolveStatus::Found;
            res.chi = k;
            res.coloring = std::move(sub.coloring);
            return res;
        }
    }
}

SolveResult list_colorable(const Digraph& d, const ListAssignment& lists,
                           const SolveLimits& limits) {
    int n = d.vertex_count();
    if (lists.size() != n)
        throw std::invalid_argument("list_colorable: list count does not match vertex count");
    validate_lists(lists);

    SolveResult res;
    if (n == 0) {
        res.status = SolveStatus::Found;
        res.coloring = PartialColoring(0, lists.universe);
        return res;
    }

    std::vector<int> order = degree_descending_order(d);
    Budget budget(limits);
    ClassTracker tracker(d, lists.universe);
    PartialColoring assignment(n, lists.universe);

    std::vector<int> choice(n, -1);  // index into lists of order[pos]
    int pos = 0;
    int idx = 0;
    while (true) {
        int v = order[pos];
        const std::vector<int>& list = lists.lists[v];
        bool placed = false;
        for (; idx < static_cast<int>(list.size()); ++idx) {
            if (!budget.tick()) {
                res.status = SolveStatus::ResourceLimit;
                res.nodes = budget.nodes;
                return res;
            }
            if (tracker.try_insert(v, list[idx])) { placed = true; break; }
        }
        if (placed) {
            choice[pos] = idx;
            assignment.colors[v] = list[idx];
            ++pos;
            idx = 0;
            if (pos == n) {
                res.status = SolveStatus::Found;
                res.coloring = assignment;
                res.nodes = budget.nodes;
                return res;
            }
        } else {
            if (pos == 0) {
                res.status = SolveStatus::None;
                res.nodes = budget.nodes;
                return res;
            }
            --pos;
            int u = order[pos];
            tracker.remove(u, lists.lists[u][choice[pos]]);
            assignment.colors[u] = PartialColoring::kUncolored;
            idx = choice[pos] + 1;
        }
    }
}

namespace {

// Cycle detection on one color class by three-state DFS, kept separate from
// the kernel-peeling test so the oracle shares no code with the solvers.
bool class_has_cycle(const Digraph& d, const std::vector<int>& colors, int cls) {
    int n = d.vertex_count();
    std::vector<int8_t> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (colors[s] != cls || state[s] != 0) continue;
        stack.emplace_back(s, 0);
        state[s] = 1;
        while (!stack.empty()) {
            auto [v, i] = stack.back();
            auto nbrs = d.out_neighbors(v);
            bool descended = false;
            while (i < nbrs.size()) {
                int w = nbrs[i++];
                if (colors[w] != cls) continue;
                if (state[w] == 1) return true;
                if (state[w] == 0) {
                    stack.back().second = i;
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

int brute_force_chi(const Digraph& d, const SolveLimits& limits) {
    int n = d.vertex_count();
    if (n > limits.brute_force_max_n)
        throw GuardError("brute_force_chi: " + std::to_string(n) + " vertices exceeds guard of " +
                         std::to_string(limits.brute_force_max_n));
    if (n == 0) return 0;

    for (int k = 1; k <= n; ++k) {
        std::vector<int> assign(n, 0);
        while (true) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) ok = !class_has_cycle(d, assign, c);
            if (ok) return k;
            int i = 0;
            while (i < n && assign[i] == k - 1) assign[i++] = 0;
            if (i == n) break;
            ++assign[i];
        }
    }
    return n;  // unreachable: n singleton classes are always proper
}

} // namespace dicolor
