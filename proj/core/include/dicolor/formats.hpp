#pragma once

#include <iosfwd>
#include <vector>

#include "dicolor/coloring_types.hpp"
#include "dicolor/digraph.hpp"

namespace dicolor {

/// Digraph text format. Lines starting with '#' are comments and may appear
/// anywhere. The first non-comment line is "n m"; exactly m non-comment
/// lines "u v" follow (0-based ids). Loops and duplicate arcs are rejected.
/// All failures raise ParseError naming the offending line.
Digraph parse_digraph(std::istream& in);

/// Writes "n m" followed by the arcs in lexicographic order.
void write_digraph(std::ostream& out, const Digraph& d);

/// Coloring file: one line per vertex, "v c" for a colored vertex or "v -"
/// for an uncolored one; every vertex of [0, n) exactly once, any order.
/// Palette size is taken as 1 + the largest color present (or the explicit
/// override, which must cover every color in the file).
PartialColoring parse_coloring(std::istream& in, int n, int palette_override = -1);

void write_coloring(std::ostream& out, const PartialColoring& coloring);

/// List-assignment file: one line per vertex, "v: c1 c2 ...", every vertex
/// exactly once, lists nonempty, colors nonnegative. The universe is 1 + the
/// largest color present.
ListAssignment parse_lists(std::istream& in, int n);

void write_lists(std::ostream& out, const ListAssignment& lists);

} // namespace dicolor
