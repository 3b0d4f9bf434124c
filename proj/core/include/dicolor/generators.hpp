#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

/// Exact uniform draw from [0, bound) by rejection; mt19937_64 has a
/// standardized sequence, so results are identical across platforms.
/// Throws std::invalid_argument when bound is 0.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; n >= 2 (n == 2 is the digon).
Digraph gen_directed_cycle(int n);

/// Cycle with every edge doubled into a digon; n >= 3.
Digraph gen_bidirected_cycle(int n);

/// All ordered pairs; k >= 1.
Digraph gen_bidirected_complete(int k);

/// Directed cycle on n >= 4 vertices plus the chord 0 -> 2.
Digraph gen_chorded_cycle(int n);

/// Two directed triangles (0,1,2) and (0,3,4) sharing vertex 0.
Digraph gen_shared_triangles();

/// Seven vertices, one directed triangle per line of the point set
/// {012, 034, 056, 135, 146, 236, 245}; bit i of `orientation` reverses
/// line i's rotation. Every pair lies on exactly one line, so the result
/// is always a digon-free 3-regular tournament.
Digraph gen_fano(unsigned orientation = 0);

/// Uniform random orientation of each pair, pairs in lexicographic order,
/// one coin per pair from a seeded deterministic stream.
Digraph gen_random_tournament(int n, uint64_t seed);

/// Superposition of `delta` arc-disjoint permutation digraphs, giving
/// out-degree == in-degree == delta everywhere with no digons. Conflicting
/// entries of a sampled permutation (loops, repeated arcs, digons) are
/// repaired by random transpositions; when the repair budget runs out on a
/// modest-sized input, a step-bounded backtracking search finishes the
/// layer, and a stuck construction restarts from scratch a bounded number
/// of times before throwing. Requires 2 * delta < n.
Digraph gen_random_regular_digonfree(int n, int delta, uint64_t seed);

/// Arc i -> j iff (j - i) mod n lies in `residues`. Requires odd n >= 3 and
/// exactly one of {r, n-r} per residue pair, which makes the result an
/// (n-1)/2-regular tournament.
Digraph gen_rotational_tournament(int n, const std::vector<int>& residues);

} // namespace dicolor
