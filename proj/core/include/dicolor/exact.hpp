#pragma once

#include <cstdint>
#include <vector>

#include "dicolor/coloring_types.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

/// Budgets for the backtracking solvers. Nodes count tentative color
/// assignments. Exceeding a budget yields the ResourceLimit outcome, never
/// a wrong answer.
struct SolveLimits {
    uint64_t max_nodes = UINT64_MAX;
    double max_seconds = 1e18;
    int brute_force_max_n = 8;
};

enum class SolveStatus { Found, None, ResourceLimit };

struct SolveResult {
    SolveStatus status = SolveStatus::None;
    PartialColoring coloring;    // total proper coloring when status == Found
    uint64_t nodes = 0;
};

/// Backtracking search for a partition into k acyclic classes. Vertices are
/// tried in degree-descending order (ties by ascending id); a vertex may
/// only open one color beyond those already in use, which breaks color
/// symmetry. Each tentative assignment re-checks its class for acyclicity.
SolveResult is_k_colorable(const Digraph& d, int k, const SolveLimits& limits = {});

struct ChiResult {
    SolveStatus status = SolveStatus::Found;
    int chi = 0;
    PartialColoring coloring;
    uint64_t nodes = 0;
};

/// Smallest k admitting a partition into k acyclic classes, searched
/// upward from 1 (2 when the digraph has a cycle). The empty digraph
/// needs 0 classes.
ChiResult chromatic_number(const Digraph& d, const SolveLimits& limits = {});

/// Same search restricted to per-vertex color lists; no symmetry breaking.
SolveResult list_colorable(const Digraph& d, const ListAssignment& lists,
                           const SolveLimits& limits = {});

///// Independent oracle: tries every assignment of k colors for k = 1, 2, ...
/// and checks classes with a separate DFS-based cycle test. Exponential in
/// n; guarded by limits.brute_force_max_n (GuardError beyond it).
int brute_force_chi(const Digraph& d, const SolveLimits& limits = {});

} // namespace dicolor
