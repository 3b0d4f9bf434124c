#pragma once

#include <optional>
#include <vector>

#include "dicolor/coloring_types.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/exact.hpp"

namespace dicolor {

// Shape of a single block of the underlying multigraph.
enum class BlockKind {
    DirectedCycle,       // block is a directed cycle (length >= 3) with no reverse arcs
    Digon,               // two mutually opposite arcs on two vertices
    OddBidirectedCycle,  // bidirected cycle of odd length >= 3
    BidirectedComplete,  // complete digraph with all arcs in both directions (>= 2 vertices)
    Other,
};

struct BlockClass {
    BlockKind kind = BlockKind::Other;
    int size = 0;  // number of vertices in the block
};

// Classifies one block as returned by Digraph::blocks(). A bidirected
// triangle matches both the odd-cycle and the complete shape; it is
// reported as OddBidirectedCycle.
BlockClass classify_block(const Block& block);

// Result of testing whether a whole digraph is one of the shapes that force
// k colors despite every vertex having in- and out-degree k-1.
struct ObstructionCheck {
    bool matches = false;
    BlockKind kind = BlockKind::Other;  // valid when matches
    bool regular_ok = false;            // every vertex has d+ = d- = k-1
    bool shape_ok = false;              // digraph is the expected shape for k
    bool critical = false;              // removing any single arc lowers the exact
                                        // coloring number below k (only evaluated
                                        // when matches is true)
};

// Tests whether `d` is the canonical k-chromatic obstruction: for k == 2 a
// directed cycle (any length >= 2), for k == 3 a bidirected odd cycle, for
// k >= 4 a bidirected complete digraph on k vertices. Criticality is
// verified with the exact solver.
ObstructionCheck brooks_obstruction(const Digraph& d, int k, const SolveLimits& limits = {});

// Structural test used to recognize list assignments that can defeat
// greedy-style arguments: every vertex Eulerian, every list exactly as large
// as the out-degree, and every block of the underlying multigraph one of the
// special shapes. Requires a weakly connected digraph (throws
// std::invalid_argument otherwise). Depends only on list sizes, not on the
// particular colors.
struct GallaiCandidate {
    bool hypothesis_ok = false;  // |L(v)| >= d+(v) when Eulerian, else min degree + 1
    bool eulerian = false;
    bool lists_tight = false;    // |L(v)| == d+(v) for every vertex
    bool blocks_ok = false;      // no block classifies as Other
    bool candidate = false;      // eulerian && lists_tight && blocks_ok
};

GallaiCandidate gallai_candidate(const Digraph& d, const ListAssignment& lists);

// Exhaustive check that every assignment of k-element lists (over a bounded
// color universe) admits a coloring. List assignments are enumerated up to
// color renaming.
enum class ChoosableStatus { Choosable, Counterexample, ResourceLimit };

struct ChoosableResult {
    ChoosableStatus status = ChoosableStatus::Choosable;
    std::optional<ListAssignment> counterexample;  // set when status == Counterexample
    long long assignments_checked = 0;
};

// Throws GuardError when d.vertex_count() > n_guard. `universe` bounds the
// number of distinct colors available to the adversary; it is further capped
// at n * k, which is enough to realize every assignment shape.
ChoosableResult choosable_bound_check(const Digraph& d, int k, int universe,
                                      const SolveLimits& limits = {}, int n_guard = 6);

}  // namespace dicolor
