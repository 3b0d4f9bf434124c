#include "dicolor/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dicolor {

namespace {

[[noreturn]] void bad_arc(const char* what, int u, int v) {
    throw std::invalid_argument(std::string(what) + " (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
}

void check_vertex(int v, int n, const char* context) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(context) + ": vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

} // namespace

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : n_(n), m_(static_cast<int>(arcs.size())) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<size_t> out_cnt(n + 1, 0), in_cnt(n + 1, 0);
    for (const auto& [u, v] : arcs) {
        check_vertex(u, n, "arc tail");
        check_vertex(v, n, "arc head");
        if (u == v) bad_arc("loop arc", u, v);
        ++out_cnt[u + 1];
        ++in_cnt[v + 1];
    }
    out_off_.assign(n + 1, 0);
    in_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        out_off_[v + 1] = out_off_[v] + out_cnt[v + 1];
        in_off_[v + 1] = in_off_[v] + in_cnt[v + 1];
    }
    out_data_.resize(arcs.size());
    in_data_.resize(arcs.size());
    std::vector<size_t> opos(out_off_.begin(), out_off_.end() - 1);
    std::vector<size_t> ipos(in_off_.begin(), in_off_.end() - 1);
    for (const auto& [u, v] : arcs) {
        out_data_[opos[u]++] = v;
        in_data_[ipos[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto ob = out_data_.begin() + static_cast<long>(out_off_[v]);
        auto oe = out_data_.begin() + static_cast<long>(out_off_[v + 1]);
        std::sort(ob, oe);
        auto dup = std::adjacent_find(ob, oe);
        if (dup != oe) bad_arc("duplicate arc", v, *dup);
        auto ib = in_data_.begin() + static_cast<long>(in_off_[v]);
        auto ie = in_data_.begin() + static_cast<long>(in_off_[v + 1]);
        std::sort(ib, ie);
    }
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u, n_, "has_arc");
    check_vertex(v, n_, "has_arc");
    auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for_each_arc([&](int u, int v) { out.emplace_back(u, v); });
    return out;
}

long long integer_sqrt(long long p) {
    if (p < 0) throw std::invalid_argument("integer_sqrt of negative value");
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(p)));
    while (s > 0 && s * s > p) --s;
    while ((s + 1) * (s + 1) <= p) ++s;
    return s;
}

int ceil_sqrt(long long p) {
    long long s = integer_sqrt(p);
    return static_cast<int>(s * s == p ? s : s + 1);
}

DegreeProfile degree_profile(const Digraph& d) {
    DegreeProfile p;
    int n = d.vertex_count();
    p.out_degrees.resize(n);
    p.in_degrees.resize(n);
    for (int v = 0; v < n; ++v) {
        int od = d.out_degree(v), id = d.in_degree(v);
        p.out_degrees[v] = od;
        p.in_degrees[v] = id;
        p.max_out_degree = std::max(p.max_out_degree, od);
        p.max_in_degree = std::max(p.max_in_degree, id);
        p.max_degree_product = std::max(p.max_degree_product, static_cast<long long>(od) * id);
    }
    p.degree_geo_max = std::sqrt(static_cast<double>(p.max_degree_product));
    p.degree_geo_ceil = ceil_sqrt(p.max_degree_product);
    return p;
}

AcyclicityCheck is_acyclic_subset(const Digraph& d, const std::vector<int>& subset) {
    int n = d.vertex_count();
    std::vector<uint8_t> in_set(n, 0);
    for (int v : subset) {
        check_vertex(v, n, "is_acyclic_subset");
        in_set[v] = 1;
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) members.push_back(v);

    std::vector<int> indeg(n, 0);
    for (int v : members)
        for (int32_t u : d.in_neighbors(v))
            if (in_set[u]) ++indeg[v];

    std::vector<int> queue;
    for (int v : members)
        if (indeg[v] == 0) queue.push_back(v);
    size_t head = 0;
    size_t removed = 0;
    std::vector<uint8_t> alive = in_set;
    while (head < queue.size()) {
        int v = queue[head++];
        alive[v] = 0;
        ++removed;
        for (int32_t w : d.out_neighbors(v))
            if (alive[w] && in_set[w] && --indeg[w] == 0) queue.push_back(w);
    }

    AcyclicityCheck res;
    if (removed == members.size()) return res;

    // Every survivor keeps an in-neighbor among survivors, so a backward
    // walk must revisit a vertex; the revisited stretch is a cycle.
    res.acyclic = false;
    int start = -1;
    for (int v : members)
        if (alive[v]) { start = v; break; }
    std::vector<int> walk;
    std::vector<int> seen_at(n, -1);
    int cur = start;
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        int pred = -1;
        for (int32_t u : d.in_neighbors(cur))
            if (alive[u]) { pred = u; break; }
        cur = pred;
    }
    // walk[seen_at[cur]..] lists the cycle backwards from cur.
    res.cycle.assign(walk.begin() + seen_at[cur], walk.end());
    std::reverse(res.cycle.begin(), res.cycle.end());
    return res;
}

std::vector<Arc> find_digons(const Digraph& d) {
    std::vector<Arc> out;
    d.for_each_arc([&](int u, int v) {
        if (u < v && d.has_arc(v, u)) out.emplace_back(u, v);
    });
    return out;
}

EulerianCheck is_eulerian(const Digraph& d) {
    EulerianCheck res;
    int n = d.vertex_count();
    res.balanced.resize(n, 1);
    for (int v = 0; v < n; ++v) {
        if (d.out_degree(v) != d.in_degree(v)) {
            res.balanced[v] = 0;
            res.eulerian = false;
        }
    }
    return res;
}

namespace {

struct EdgeRef {
    int to;
    int edge_id;
};

} // namespace

std::vector<Block> blocks(const Digraph& d) {
    int n = d.vertex_count();
    int m = d.arc_count();

    // Underlying multigraph: one undirected edge per arc.
    std::vector<std::vector<EdgeRef>> adj(n);
    std::vector<Arc> arc_list = d.arcs();
    for (int e = 0; e < m; ++e) {
        auto [u, v] = arc_list[e];
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> block_edges;
    int timer = 0;

    // Iterative DFS; frames track the position inside adj[v].
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                EdgeRef e = adj[f.v][f.next++];
                if (e.edge_id == f.parent_edge) continue;
                if (disc[e.to] < 0) {
                    edge_stack.push_back(e.edge_id);
                    disc[e.to] = low[e.to] = timer++;
                    stack.push_back({e.to, e.edge_id, 0});
                } else if (disc[e.to] < disc[f.v]) {
                    edge_stack.push_back(e.edge_id);
                    low[f.v] = std::min(low[f.v], disc[e.to]);
                }
            } else {
                int child = f.v;
                int child_edge = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) continue;
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[child]);
                if (low[child] >= disc[p.v]) {
                    // p.v separates the subtree under child: pop its block.
                    std::vector<int> edges;
                    while (!edge_stack.empty()) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        edges.push_back(e);
                        if (e == child_edge) break;
                    }
                    block_edges.push_back(std::move(edges));
                }
            }
        }
    }

    std::vector<Block> out;
    out.reserve(block_edges.size());
    for (auto& edges : block_edges) {
        Block b;
        b.arcs.reserve(edges.size());
        for (int e : edges) b.arcs.push_back(arc_list[e]);
        std::sort(b.arcs.begin(), b.arcs.end());
        for (auto [u, v] : b.arcs) {
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<int>& subset) {
    int n = d.vertex_count();
    std::vector<uint8_t> in_set(n, 0);
    for (int v : subset) {
        check_vertex(v, n, "induced_subdigraph");
        in_set[v] = 1;
    }
    InducedSubdigraph res;
    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v) {
        if (in_set[v]) {
            new_id[v] = static_cast<int>(res.original_ids.size());
            res.original_ids.push_back(v);
        }
    }
    std::vector<Arc> arcs;
    for (int v : res.original_ids)
        for (int32_t w : d.out_neighbors(v))
            if (in_set[w]) arcs.emplace_back(new_id[v], new_id[w]);
    res.graph = Digraph(static_cast<int>(res.original_ids.size()), arcs);
    return res;
}

std::vector<std::vector<int>> weakly_connected_components(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = c;
        queue.assign(1, s);
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            out[c].push_back(v);
            for (int32_t w : d.out_neighbors(v))
                if (comp[w] < 0) { comp[w] = c; queue.push_back(w); }
            for (int32_t w : d.in_neighbors(v))
                if (comp[w] < 0) { comp[w] = c; queue.push_back(w); }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool is_weakly_connected(const Digraph& d) {
    return weakly_connected_components(d).size() <= 1;
}

} // namespace dicolor
