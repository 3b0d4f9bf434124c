#include "dicolor/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dicolor/errors.hpp"

namespace dicolor {

namespace {

constexpr int kMaxPackable = 11;

void check_packable(int n) {
    if (n > kMaxPackable)
        throw std::invalid_argument("packed adjacency supports at most " +
                                    std::to_string(kMaxPackable) + " vertices");
}

inline int bit_index(int n, int i, int j) { return i * n + j; }

inline bool get_bit(unsigned __int128 bits, int n, int i, int j) {
    return (bits >> (127 - bit_index(n, i, j))) & 1;
}

inline unsigned __int128 set_bit(unsigned __int128 bits, int n, int i, int j) {
    return bits | (static_cast<unsigned __int128>(1) << (127 - bit_index(n, i, j)));
}

// -1: permuted matrix is smaller, 0: equal, +1: larger. Early exit on the
// first differing entry in row-major order.
int compare_permuted(int n, unsigned __int128 bits, const int* perm) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool orig = get_bit(bits, n, i, j);
            bool perm_bit = get_bit(bits, n, perm[i], perm[j]);
            if (perm_bit != orig) return perm_bit < orig ? -1 : 1;
        }
    }
    return 0;
}

// Cheap pre-filter: a canonically labeled matrix cannot decrease under any
// transposition. Most non-canonical labelings fail here.
bool survives_transpositions(int n, unsigned __int128 bits) {
    int perm[kMaxPackable];
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::iota(perm, perm + n, 0);
            std::swap(perm[a], perm[b]);
            if (compare_permuted(n, bits, perm) < 0) return false;
        }
    }
    return true;
}

} // namespace

int enumeration_guard(GraphFamily family) {
    switch (family) {
        case GraphFamily::AllDigraphs: return 5;
        case GraphFamily::Tournaments: return 7;
        case GraphFamily::RegularTournaments: return 9;
        case GraphFamily::DigonFree: return 5;
    }
    return 0;
}

unsigned __int128 adjacency_bits(const Digraph& d) {
    int n = d.vertex_count();
    check_packable(n);
    unsigned __int128 bits = 0;
    d.for_each_arc([&](int u, int v) { bits = set_bit(bits, n, u, v); });
    return bits;
}

Digraph digraph_from_bits(int n, unsigned __int128 bits) {
    check_packable(n);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && get_bit(bits, n, i, j)) arcs.emplace_back(i, j);
    return Digraph(n, arcs);
}

bool is_canonical_labeling(int n, unsigned __int128 bits) {
    check_packable(n);
    if (n <= 1) return true;
    if (!survives_transpositions(n, bits)) return false;
    int perm[kMaxPackable];
    std::iota(perm, perm + n, 0);
    while (std::next_permutation(perm, perm + n)) {
        if (compare_permuted(n, bits, perm) < 0) return false;
    }
    return true;
}

unsigned __int128 canonical_form(const Digraph& d) {
    int n = d.vertex_count();
    check_packable(n);
    unsigned __int128 bits = adjacency_bits(d);
    if (n <= 1) return bits;
    unsigned __int128 best = bits;
    int perm[kMaxPackable];
    std::iota(perm, perm + n, 0);
    while (std::next_permutation(perm, perm + n)) {
        unsigned __int128 cand = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && get_bit(bits, n, perm[i], perm[j])) cand = set_bit(cand, n, i, j);
        best = std::min(best, cand);
    }
    return best;
}

long long automorphism_count(const Digraph& d) {
    int n = d.vertex_count();
    check_packable(n);
    if (n <= 1) return 1;
    unsigned __int128 bits = adjacency_bits(d);
    long long count = 1;  // identity
    int perm[kMaxPackable];
    std::iota(perm, perm + n, 0);
    while (std::next_permutation(perm, perm + n)) {
        if (compare_permuted(n, bits, perm) == 0) ++count;
    }
    return count;
}

namespace {

// Pair states; tournaments use only Fwd/Bwd, digon-free graphs skip Both.
enum PairState : int { None = 0, Fwd = 1, Bwd = 2, Both = 3 };

struct PairEnum {
    int n;
    GraphFamily family;
    const std::function<bool(const Digraph&)>* visit;  // null: count labeled only
    long long labeled = 0;
    bool stopped = false;

    std::vector<std::pair<int, int>> pairs;  // lexicographic
    std::vector<int> out_deg, in_deg, remaining;  // remaining unassigned pairs per vertex
    unsigned __int128 bits = 0;
    int cap = -1;  // exact out-degree for regular tournaments

    explicit PairEnum(int n_, GraphFamily f, const std::function<bool(const Digraph&)>* v)
        : n(n_), family(f), visit(v), out_deg(n_, 0), in_deg(n_, 0), remaining(n_, 0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (auto [i, j] : pairs) {
            ++remaining[i];
            ++remaining[j];
        }
        if (family == GraphFamily::RegularTournaments) cap = (n - 1) / 2;
    }

    bool regular_feasible(int v) const {
        return out_deg[v] <= cap && out_deg[v] + remaining[v] >= cap;
    }

    void emit() {
        ++labeled;
        if (!visit) return;
        if (!is_canonical_labeling(n, bits)) return;
        if (!(*visit)(digraph_from_bits(n, bits))) stopped = true;
    }

    void place(int idx) {
        if (stopped) return;
        if (idx == static_cast<int>(pairs.size())) {
            emit();
            return;
        }
        auto [u, v] = pairs[idx];
        --remaining[u];
        --remaining[v];
        const bool tournament = family == GraphFamily::Tournaments ||
                                family == GraphFamily::RegularTournaments;
        for (int state = tournament ? Fwd : None;
             state <= (tournament || family == GraphFamily::DigonFree ? Bwd : Both); ++state) {
            unsigned __int128 saved = bits;
            if (state == Fwd || state == Both) {
                bits = set_bit(bits, n, u, v);
                ++out_deg[u];
                ++in_deg[v];
            }
            if (state == Bwd || state == Both) {
                bits = set_bit(bits, n, v, u);
                ++out_deg[v];
                ++in_deg[u];
            }
            bool ok = cap < 0 || (regular_feasible(u) && regular_feasible(v));
            if (ok) place(idx + 1);
            if (state == Fwd || state == Both) {
                --out_deg[u];
                --in_deg[v];
            }
            if (state == Bwd || state == Both) {
                --out_deg[v];
                --in_deg[u];
            }
            bits = saved;
            if (stopped) break;
        }
        ++remaining[u];
        ++remaining[v];
    }
};

void check_guard(int n, GraphFamily family, int max_n) {
    int guard = enumeration_guard(family);
    if (max_n >= 0) guard = std::min(guard, max_n);
    if (n > guard)
        throw GuardError("enumerate_small: " + std::to_string(n) +
                         " vertices exceeds guard of " + std::to_string(guard));
    if (n < 0) throw std::invalid_argument("enumerate_small: negative vertex count");
}

} // namespace

void enumerate_small(int n, GraphFamily family,
                     const std::function<bool(const Digraph&)>& visit, int max_n) {
    check_guard(n, family, max_n);
    PairEnum e(n, family, &visit);
    e.place(0);
}

std::vector<Digraph> enumerate_small_vec(int n, GraphFamily family, int max_n) {
    std::vector<Digraph> out;
    enumerate_small(n, family, [&](const Digraph& d) {
        out.push_back(d);
        return true;
    }, max_n);
    return out;
}

long long count_labeled(int n, GraphFamily family) {
    check_guard(n, family, -1);
    PairEnum e(n, family, nullptr);
    e.place(0);
    return e.labeled;
}

} // namespace dicolor
