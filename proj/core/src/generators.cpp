#include "dicolor/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace dicolor {

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Digraph gen_directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed cycle needs at least 2 vertices");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, arcs);
}

Digraph gen_bidirected_cycle(int n) {
    if (n < 3) throw std::invalid_argument("bidirected cycle needs at least 3 vertices");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(i, (i + 1) % n);
        arcs.emplace_back((i + 1) % n, i);
    }
    return Digraph(n, arcs);
}

Digraph gen_bidirected_complete(int k) {
    if (k < 1) throw std::invalid_argument("bidirected complete digraph needs at least 1 vertex");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j) arcs.emplace_back(i, j);
    return Digraph(k, arcs);
}

Digraph gen_chorded_cycle(int n) {
    if (n < 4) throw std::invalid_argument("chorded cycle needs at least 4 vertices");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    arcs.emplace_back(0, 2);
    return Digraph(n, arcs);
}

Digraph gen_shared_triangles() {
    return Digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

Digraph gen_fano(unsigned orientation) {
    if (orientation > 127) throw std::invalid_argument("orientation must fit in 7 bits");
    static constexpr int kLines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                         {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    std::vector<Arc> arcs;
    for (int i = 0; i < 7; ++i) {
        int a = kLines[i][0], b = kLines[i][1], c = kLines[i][2];
        if (orientation >> i & 1) std::swap(b, c);
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, c);
        arcs.emplace_back(c, a);
    }
    return Digraph(7, arcs);
}

Digraph gen_random_tournament(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tournament needs at least 1 vertex");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (uniform_below(rng, 2) == 0)
                arcs.emplace_back(i, j);
            else
                arcs.emplace_back(j, i);
        }
    return Digraph(n, arcs);
}

namespace {

// Layered generation state: row v of `targets_` holds the heads of v's
// arcs from committed layers. A candidate entry conflicts when it is a
// loop, repeats an arc of an earlier layer, or closes a digon against any
// placed arc (including inside its own layer).
class RegularBuilder {
public:
    RegularBuilder(int n, int delta)
        : n_(n), delta_(delta), targets_(static_cast<size_t>(n) * delta) {}

    bool conflicts(int layer, int v, const std::vector<int>& perm) const {
        int head = perm[v];
        if (head == v) return true;
        const int* row_v = &targets_[static_cast<size_t>(v) * delta_];
        const int* row_h = &targets_[static_cast<size_t>(head) * delta_];
        for (int l = 0; l < layer; ++l) {
            if (row_v[l] == head) return true;  // repeated arc
            if (row_h[l] == v) return true;     // digon against an earlier layer
        }
        return perm[head] == v;                 // digon inside this layer
    }

    // True when the layer was made conflict-free within the swap budget.
    // A swap changes perm at two positions; only those two vertices and the
    // two now targeting them can change status, so a worklist suffices.
    bool repair_layer(int layer, std::vector<int>& perm, std::mt19937_64& rng) {
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v) inv[perm[v]] = v;
        std::vector<int> work;
        for (int v = 0; v < n_; ++v)
            if (conflicts(layer, v, perm)) work.push_back(v);

        const long long swap_budget = 200LL * n_ + 1000;
        long long swaps = 0;
        while (!work.empty()) {
            int v = work.back();
            work.pop_back();
            if (!conflicts(layer, v, perm)) continue;
            if (++swaps > swap_budget) return false;
            int other = static_cast<int>(uniform_below(rng, n_));
            std::swap(perm[v], perm[other]);
            inv[perm[v]] = v;
            inv[perm[other]] = other;
            work.push_back(v);
            work.push_back(other);
            work.push_back(inv[v]);
            work.push_back(inv[other]);
        }
        return true;
    }

    // Candidate head u for v's arc in `layer`, with perm assigned only on
    // vertices below v. The same-layer digon against a later vertex is
    // caught when that vertex is assigned.
    bool conflicts_partial(int layer, int v, int u, const std::vector<int>& perm) const {
        if (u == v) return true;
        const int* row_v = &targets_[static_cast<size_t>(v) * delta_];
        const int* row_u = &targets_[static_cast<size_t>(u) * delta_];
        for (int l = 0; l < layer; ++l) {
            if (row_v[l] == u) return true;
            if (row_u[l] == v) return true;
        }
        return u < v && perm[u] == v;
    }

    // Bounded backtracking search for a conflict-free layer: DFS in vertex
    // order over a seeded random target order. Finds a completion of the
    // committed layers quickly when one exists nearby — the case that
    // defeats the randomized repair on tight instances (n close to
    // 2 * delta + 1). The step budget keeps an infeasible layer state from
    // turning the search into an exhaustive proof; running out of budget
    // reads as failure and triggers a whole-construction restart.
    bool backtrack_layer(int layer, std::vector<int>& perm, std::mt19937_64& rng) {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        for (int i = n_ - 1; i > 0; --i) {
            int j = static_cast<int>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
            std::swap(order[i], order[j]);
        }
        std::vector<uint8_t> used(n_, 0);
        std::vector<int> choice(n_, -1);
        perm.assign(n_, -1);
        long long budget = 64LL * n_ + 4096;
        int v = 0;
        while (v >= 0 && v < n_) {
            if (--budget < 0) return false;
            int idx = choice[v] + 1;
            for (; idx < n_; ++idx) {
                int u = order[idx];
                if (!used[u] && !conflicts_partial(layer, v, u, perm)) break;
            }
            if (idx < n_) {
                choice[v] = idx;
                perm[v] = order[idx];
                used[order[idx]] = 1;
                ++v;
            } else {
                choice[v] = -1;
                --v;
                if (v >= 0) {
                    used[perm[v]] = 0;
                    perm[v] = -1;
                }
            }
        }
        return v == n_;
    }

    void commit_layer(int layer, const std::vector<int>& perm) {
        for (int v = 0; v < n_; ++v) targets_[static_cast<size_t>(v) * delta_ + layer] = perm[v];
    }

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        out.reserve(targets_.size());
        for (int v = 0; v < n_; ++v)
            for (int l = 0; l < delta_; ++l)
                out.emplace_back(v, targets_[static_cast<size_t>(v) * delta_ + l]);
        return out;
    }

private:
    int n_, delta_;
    std::vector<int> targets_;
};

} // namespace

Digraph gen_random_regular_digonfree(int n, int delta, uint64_t seed) {
    if (delta < 1) throw std::invalid_argument("degree must be at least 1");
    if (2 * delta >= n)
        throw std::invalid_argument("regular digon-free generation requires 2 * delta < n");

    std::mt19937_64 rng(seed);
    // Backtracking is only affordable on modest sizes; above the cap the
    // randomized repair is the sole strategy, which is reliable there
    // because tightness (n close to 2 * delta) is what defeats it.
    const int backtrack_cap = 4096;
    const int construction_attempts = 20;
    std::vector<int> perm(n);
    for (int attempt = 0; attempt < construction_attempts; ++attempt) {
        RegularBuilder builder(n, delta);
        bool built = true;
        for (int layer = 0; layer < delta && built; ++layer) {
            const int layer_retries = 16;
            bool done = false;
            for (int retry = 0; retry < layer_retries && !done; ++retry) {
                for (int i = 0; i < n; ++i) perm[i] = i;
                for (int i = n - 1; i > 0; --i) {
                    int j = static_cast<int>(uniform_below(rng, static_cast<uint64_t>(i) + 1));
                    std::swap(perm[i], perm[j]);
                }
                done = builder.repair_layer(layer, perm, rng);
            }
            if (!done && n <= backtrack_cap) done = builder.backtrack_layer(layer, perm, rng);
            if (done)
                builder.commit_layer(layer, perm);
            else
                built = false;  // earlier layers painted into a corner; restart
        }
        if (built) return Digraph(n, builder.arcs());
    }
    throw std::runtime_error("regular digon-free generation exhausted its retry budget");
}

Digraph gen_rotational_tournament(int n, const std::vector<int>& residues) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("rotational tournament needs odd n >= 3");
    std::vector<uint8_t> chosen(n, 0);
    for (int r : residues) {
        if (r <= 0 || r >= n)
            throw std::invalid_argument("residue " + std::to_string(r) + " out of range (0, n)");
        if (chosen[r]) throw std::invalid_argument("residue " + std::to_string(r) + " repeated");
        chosen[r] = 1;
    }
    for (int r = 1; r < n; ++r) {
        if (chosen[r] && chosen[n - r])
            throw std::invalid_argument("residues contain both " + std::to_string(r) + " and " +
                                        std::to_string(n - r));
        if (!chosen[r] && !chosen[n - r])
            throw std::invalid_argument("residues contain neither " + std::to_string(r) + " nor " +
                                        std::to_string(n - r));
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int r = 1; r < n; ++r)
            if (chosen[r]) arcs.emplace_back(i, (i + r) % n);
    return Digraph(n, arcs);
}

} // namespace dicolor
