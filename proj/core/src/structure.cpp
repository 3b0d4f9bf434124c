#include "dicolor/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "dicolor/errors.hpp"

namespace dicolor {

namespace {

bool block_has_arc(const Block& block, int u, int v) {
    return std::binary_search(block.arcs.begin(), block.arcs.end(), Arc{u, v});
}

// Local out/in degree and distinct-neighbor count per block vertex.
struct BlockDegrees {
    std::vector<int> out_deg, in_deg, neighbor_count;
};

BlockDegrees block_degrees(const Block& block) {
    int s = static_cast<int>(block.vertices.size());
    auto local = [&](int v) {
        auto it = std::lower_bound(block.vertices.begin(), block.vertices.end(), v);
        return static_cast<int>(it - block.vertices.begin());
    };
    BlockDegrees deg{std::vector<int>(s, 0), std::vector<int>(s, 0), std::vector<int>(s, 0)};
    std::vector<std::set<int>> neighbors(s);
    for (const auto& [u, v] : block.arcs) {
        int lu = local(u), lv = local(v);
        ++deg.out_deg[lu];
        ++deg.in_deg[lv];
        neighbors[lu].insert(lv);
        neighbors[lv].insert(lu);
    }
    for (int i = 0; i < s; ++i) deg.neighbor_count[i] = static_cast<int>(neighbors[i].size());
    return deg;
}

bool all_arcs_symmetric(const Block& block) {
    for (const auto& [u, v] : block.arcs)
        if (!block_has_arc(block, v, u)) return false;
    return true;
}

bool is_directed_cycle_block(const Block& block) {
    int s = static_cast<int>(block.vertices.size());
    if (s < 3 || static_cast<int>(block.arcs.size()) != s) return false;
    auto deg = block_degrees(block);
    for (int i = 0; i < s; ++i)
        if (deg.out_deg[i] != 1 || deg.in_deg[i] != 1) return false;
    // One out-arc and one in-arc per vertex makes the block a disjoint union
    // of directed cycles; a block is connected, so it is a single cycle.
    return true;
}

bool is_bidirected_cycle_block(const Block& block) {
    int s = static_cast<int>(block.vertices.size());
    if (s < 3 || static_cast<int>(block.arcs.size()) != 2 * s) return false;
    if (!all_arcs_symmetric(block)) return false;
    auto deg = block_degrees(block);
    for (int i = 0; i < s; ++i)
        if (deg.out_deg[i] != 2 || deg.in_deg[i] != 2 || deg.neighbor_count[i] != 2) return false;
    // Symmetric arcs with exactly two distinct neighbors per vertex make the
    // underlying simple graph 2-regular, hence a single cycle (connected).
    return true;
}

bool is_bidirected_complete_block(const Block& block) {
    int s = static_cast<int>(block.vertices.size());
    if (s < 2) return false;
    if (static_cast<long long>(block.arcs.size()) != static_cast<long long>(s) * (s - 1))
        return false;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (i != j && !block_has_arc(block, block.vertices[i], block.vertices[j])) return false;
    return true;
}

}  // namespace

BlockClass classify_block(const Block& block) {
    BlockClass result;
    result.size = static_cast<int>(block.vertices.size());
    if (is_directed_cycle_block(block)) {
        result.kind = BlockKind::DirectedCycle;
    } else if (result.size == 2 && block.arcs.size() == 2) {
        result.kind = BlockKind::Digon;
    } else if (is_bidirected_cycle_block(block) && result.size % 2 == 1) {
        result.kind = BlockKind::OddBidirectedCycle;
    } else if (is_bidirected_complete_block(block)) {
        result.kind = BlockKind::BidirectedComplete;
    } else {
        result.kind = BlockKind::Other;
    }
    return result;
}

namespace {

bool whole_is_directed_cycle(const Digraph& d) {
    int n = d.vertex_count();
    if (n < 2 || d.arc_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    return is_weakly_connected(d);
}

bool whole_is_bidirected_odd_cycle(const Digraph& d) {
    int n = d.vertex_count();
    if (n < 3 || n % 2 == 0 || d.arc_count() != 2 * n) return false;
    for (int v = 0; v < n; ++v) {
        auto out = d.out_neighbors(v);
        if (out.size() != 2 || d.in_degree(v) != 2) return false;
        for (int w : out)
            if (!d.has_arc(w, v)) return false;
    }
    return is_weakly_connected(d);
}

bool whole_is_bidirected_complete(const Digraph& d, int k) {
    int n = d.vertex_count();
    if (n != k) return false;
    if (d.arc_count() != static_cast<long long>(n) * (n - 1)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !d.has_arc(u, v)) return false;
    return true;
}

Digraph remove_arc(const Digraph& d, const Arc& gone) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count() - 1);
    d.for_each_arc([&](int u, int v) {
        if (Arc{u, v} != gone) arcs.emplace_back(u, v);
    });
    return Digraph(d.vertex_count(), arcs);
}

}  // namespace

ObstructionCheck brooks_obstruction(const Digraph& d, int k, const SolveLimits& limits) {
    if (k < 2) throw std::invalid_argument("brooks_obstruction: k must be at least 2");
    ObstructionCheck check;

    check.regular_ok = true;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) != k - 1 || d.in_degree(v) != k - 1) {
            check.regular_ok = false;
            break;
        }
    }

    if (k == 2) {
        check.shape_ok = whole_is_directed_cycle(d);
        check.kind = d.vertex_count() == 2 ? BlockKind::Digon : BlockKind::DirectedCycle;
    } else if (k == 3) {
        check.shape_ok = whole_is_bidirected_odd_cycle(d);
        check.kind = BlockKind::OddBidirectedCycle;
    } else {
        check.shape_ok = whole_is_bidirected_complete(d, k);
        check.kind = BlockKind::BidirectedComplete;
    }

    check.matches = check.regular_ok && check.shape_ok;
    if (!check.matches) return check;

    // Criticality: needs k colors, and deleting any one arc makes k-1 enough.
    if (is_k_colorable(d, k - 1, limits).status != SolveStatus::None) return check;
    for (const auto& arc : d.arcs()) {
        if (is_k_colorable(remove_arc(d, arc), k - 1, limits).status != SolveStatus::Found)
            return check;
    }
    check.critical = true;
    return check;
}

GallaiCandidate gallai_candidate(const Digraph& d, const ListAssignment& lists) {
    if (!is_weakly_connected(d))
        throw std::invalid_argument("gallai_candidate: digraph must be weakly connected");
    validate_lists(lists);
    if (lists.size() != d.vertex_count())
        throw std::invalid_argument("gallai_candidate: list count differs from vertex count");

    GallaiCandidate result;
    int n = d.vertex_count();

    result.eulerian = true;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != d.in_degree(v)) result.eulerian = false;

    result.hypothesis_ok = true;
    result.lists_tight = true;
    for (int v = 0; v < n; ++v) {
        int len = static_cast<int>(lists.lists[v].size());
        int need = result.eulerian ? d.out_degree(v)
                                   : std::min(d.out_degree(v), d.in_degree(v)) + 1;
        if (len < need) result.hypothesis_ok = false;
        if (len != d.out_degree(v)) result.lists_tight = false;
    }

    result.blocks_ok = true;
    for (const auto& block : blocks(d))
        if (classify_block(block).kind == BlockKind::Other) result.blocks_ok = false;

    result.candidate = result.eulerian && result.lists_tight && result.blocks_ok;
    return result;
}

namespace {

// Enumerates every assignment of k-element lists over a bounded universe, up
// to renaming colors. New colors are introduced as a contiguous block at the
// vertex where they first appear; the remaining symmetry (blocks introduced
// together, classes with equal supports) is removed by deduplicating on the
// multiset of per-color support sets.
class ListEnumerator {
public:
    ListEnumerator(int n, int k, int universe) : n_(n), k_(k), universe_(universe) {
        lists_.resize(n_);
    }

    // Visit returns false to stop the enumeration early.
    template <typename Visit>
    bool run(Visit&& visit) {
        return recurse(0, 0, visit);
    }

private:
    template <typename Visit>
    bool recurse(int v, int used, Visit& visit) {
        if (v == n_) return emit(used, visit);
        for (int fresh = 0; fresh <= k_ && used + fresh <= universe_; ++fresh) {
            int reused = k_ - fresh;
            if (reused > used) continue;
            // Iterate over `reused`-subsets of the colors already in play.
            std::vector<int> pick(reused);
            for (int i = 0; i < reused; ++i) pick[i] = i;
            while (true) {
                auto& list = lists_[v];
                list.assign(pick.begin(), pick.end());
                for (int i = 0; i < fresh; ++i) list.push_back(used + i);
                if (!recurse(v + 1, used + fresh, visit)) return false;
                // Advance to the next subset of {0, ..., used-1}.
                int i = reused - 1;
                while (i >= 0 && pick[i] == used - reused + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < reused; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }

    template <typename Visit>
    bool emit(int used, Visit& visit) {
        // Canonical invariant: per-color sets of vertices whose list holds
        // the color, as a sorted multiset. Two assignments agree on it
        // exactly when one is a color renaming of the other.
        std::vector<uint64_t> supports(used, 0);
        for (int v = 0; v < n_; ++v)
            for (int c : lists_[v]) supports[c] |= uint64_t{1} << v;
        std::sort(supports.begin(), supports.end());
        if (!seen_.insert(supports).second) return true;

        ListAssignment assignment;
        assignment.lists = lists_;
        assignment.universe = used;
        return visit(assignment);
    }

    int n_, k_, universe_;
    std::vector<std::vector<int>> lists_;
    std::set<std::vector<uint64_t>> seen_;
};

}  // namespace

ChoosableResult choosable_bound_check(const Digraph& d, int k, int universe,
                                      const SolveLimits& limits, int n_guard) {
    int n = d.vertex_count();
    if (n > n_guard)
        throw GuardError("choosable_bound_check: digraph exceeds the exhaustive-search guard");
    if (k < 1) throw std::invalid_argument("choosable_bound_check: k must be positive");
    if (universe < k)
        throw std::invalid_argument("choosable_bound_check: universe smaller than list size");

    // n * k colors realize every assignment shape; a larger universe only
    // repeats renamings of the same shapes.
    int capped = std::min(universe, n * k);

    ChoosableResult result;
    if (n == 0) return result;

    ListEnumerator enumerator(n, k, capped);
    enumerator.run([&](const ListAssignment& assignment) {
        ++result.assignments_checked;
        SolveResult solve = list_colorable(d, assignment, limits);
        if (solve.status == SolveStatus::Found) return true;
        result.status = solve.status == SolveStatus::None ? ChoosableStatus::Counterexample
                                                          : ChoosableStatus::ResourceLimit;
        if (solve.status == SolveStatus::None) result.counterexample = assignment;
        return false;
    });
    return result;
}

}  // namespace dicolor
