#pragma once

#include <string>
#include <string_view>

#include "evenpan/digraph.hpp"

namespace evenpan {

// Exchange format:
//
//   bipartite a=<int>        or   general n=<int>
//   <tail> <head>                 one arc per line
//
// Vertex names are x0..x{a-1}, y0..y{a-1} (bipartite) or v0..v{n-1}
// (general). Lines starting with '#' and blank lines are ignored on input;
// arcs may appear in any order. Output is canonical: header, then arcs
// sorted by (tail side, tail index, head side, head index), LF endings.

std::string serialize(const Digraph& g);

/// Throws GraphError: SyntaxError (with line) or any validate_bipartite
/// error, also tagged with the offending line.
Digraph parse(std::string_view text);

}  // namespace evenpan
