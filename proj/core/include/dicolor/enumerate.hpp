#pragma once

#include <functional>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

enum class GraphFamily { AllDigraphs, Tournaments, RegularTournaments, DigonFree };

/// Hard ceilings on exhaustive enumeration per family.
int enumeration_guard(GraphFamily family);

/// Adjacency matrix of a small digraph packed row-major into 128 bits,
/// most significant bit first, so lexicographic matrix comparison is
/// integer comparison. Requires n <= 11.
unsigned __int128 adjacency_bits(const Digraph& d);

Digraph digraph_from_bits(int n, unsigned __int128 bits);

/// True when no vertex relabeling yields a lexicographically smaller
/// adjacency matrix, i.e. the labeling itself is the canonical form.
bool is_canonical_labeling(int n, unsigned __int128 bits);

/// Lexicographically smallest adjacency matrix over all relabelings.
unsigned __int128 canonical_form(const Digraph& d);

/// Number of relabelings that fix the adjacency matrix.
long long automorphism_count(const Digraph& d);

/// Streams one representative per isomorphism class, each emitted in its
/// canonical labeling, in a deterministic order. The visitor returns false
/// to stop early. `max_n` lowers the family guard; the family ceiling
/// (AllDigraphs/DigonFree 5, Tournaments 7, RegularTournaments 9) is
/// enforced with GuardError.
void enumerate_small(int n, GraphFamily family,
                     const std::function<bool(const Digraph&)>& visit, int max_n = -1);

std::vector<Digraph> enumerate_small_vec(int n, GraphFamily family, int max_n = -1);

/// Labeled instances of the family, counted without isomorphism rejection;
/// the independent cross-check for the enumeration (sum over classes of
/// n!/|Aut| must reproduce it).
long long count_labeled(int n, GraphFamily family);

} // namespace dicolor
