#pragma once

#include <string>
#include <string_view>

#include "bdom/graph.hpp"

namespace bdom {

// graph6 / sparse6 codecs, byte-compatible with the nauty tools.  Optional
// ">>graph6<<" / ">>sparse6<<" headers are accepted on input and never
// written.  A leading ':' marks sparse6.  parse_graph_line dispatches on the
// prefix and trims trailing whitespace, so lines can come straight from a
// file.  Inputs describing loops, repeated edges, degrees above 3 or more
// than 64 vertices are rejected with the matching errc.
std::string to_graph6(const SubcubicGraph& g);
std::string to_sparse6(const SubcubicGraph& g);
SubcubicGraph from_graph6(std::string_view s);
SubcubicGraph from_sparse6(std::string_view s);
SubcubicGraph parse_graph_line(std::string_view line);

// Plain adjacency text: first line "n m", then one "u v" line per edge.
std::string to_adjacency_text(const SubcubicGraph& g);
SubcubicGraph from_adjacency_text(std::string_view text);

} // namespace bdom
