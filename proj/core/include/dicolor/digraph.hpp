#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dicolor {

using Arc = std::pair<int, int>;

/// Simple digraph: no loops, no duplicate arcs. A pair of opposite arcs
/// (a digon) is allowed. Immutable after construction; adjacency is kept
/// in compressed sparse rows with neighbor lists sorted ascending.
class Digraph {
public:
    Digraph() = default;

    /// Throws std::invalid_argument on a loop, a duplicate arc, or an
    /// endpoint out of [0, n).
    Digraph(int n, const std::vector<Arc>& arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    std::span<const int32_t> out_neighbors(int v) const {
        return {out_data_.data() + out_off_[v], out_data_.data() + out_off_[v + 1]};
    }
    std::span<const int32_t> in_neighbors(int v) const {
        return {in_data_.data() + in_off_[v], in_data_.data() + in_off_[v + 1]};
    }

    int out_degree(int v) const { return static_cast<int>(out_off_[v + 1] - out_off_[v]); }
    int in_degree(int v) const { return static_cast<int>(in_off_[v + 1] - in_off_[v]); }

    bool has_arc(int u, int v) const;

    /// Arcs in lexicographic (tail, head) order, materialized on demand.
    std::vector<Arc> arcs() const;

    /// Calls f(u, v) for every arc in lexicographic order.
    template <typename F>
    void for_each_arc(F&& f) const {
        for (int u = 0; u < n_; ++u)
            for (int32_t v : out_neighbors(u)) f(u, static_cast<int>(v));
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int32_t> out_data_, in_data_;
    std::vector<size_t> out_off_{0}, in_off_{0};
};

/// Per-vertex degrees plus the degree aggregates used by the bounds.
/// max_degree_product is max over v of out_degree(v) * in_degree(v); the
/// geometric-mean maximum is its square root. All threshold tests against
/// it are done on the integer product, never on the float.
struct DegreeProfile {
    std::vector<int> out_degrees;
    std::vector<int> in_degrees;
    int max_out_degree = 0;
    int max_in_degree = 0;
    long long max_degree_product = 0;
    double degree_geo_max = 0.0;     // sqrt(max_degree_product), display only
    int degree_geo_ceil = 0;         // smallest k with k*k >= max_degree_product
};

DegreeProfile degree_profile(const Digraph& d);

/// Largest integer s with s*s <= p (p >= 0).
long long integer_sqrt(long long p);

/// Smallest integer k >= 0 with k*k >= p.
int ceil_sqrt(long long p);

struct AcyclicityCheck {
    bool acyclic = true;
    /// On failure: a directed cycle inside the tested set, listed in arc
    /// order with the closing arc back to the front implied.
    std::vector<int> cycle;
};

/// Decides whether the induced subdigraph on `subset` is acyclic, by
/// iterated removal of vertices with in-degree zero inside the subset.
/// Throws std::invalid_argument on an id outside [0, n).
AcyclicityCheck is_acyclic_subset(const Digraph& d, const std::vector<int>& subset);

/// Sorted list of digons as (u, v) pairs with u < v.
std::vector<Arc> find_digons(const Digraph& d);

struct EulerianCheck {
    bool eulerian = true;                  // every vertex balanced
    std::vector<uint8_t> balanced;         // per vertex: out_degree == in_degree
};

EulerianCheck is_eulerian(const Digraph& d);

/// Maximal 2-connected piece of the underlying multigraph, where every arc
/// counts as its own edge: a digon is a pair of parallel edges and forms a
/// block by itself, a lone arc is a bridge block. Blocks cover all arcs;
/// isolated vertices belong to no block.
struct Block {
    std::vector<int> vertices;   // ascending
    std::vector<Arc> arcs;       // lexicographic
};

/// Blocks sorted by vertex list (lexicographic), so the order is a function
/// of the digraph alone.
std::vector<Block> blocks(const Digraph& d);

struct InducedSubdigraph {
    Digraph graph;
    /// original_ids[new_id] = id in the parent digraph; ascending.
    std::vector<int> original_ids;
};

/// Induced subdigraph on `subset` (deduplicated, relabeled densely in
/// ascending original order). Throws std::invalid_argument on a bad id.
InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& subset);

/// Weakly connected components, each sorted ascending, ordered by smallest
/// member.
std::vector<std::vector<int>> weakly_connected_components(const Digraph& d);

bool is_weakly_connected(const Digraph& d);

} // namespace dicolor
