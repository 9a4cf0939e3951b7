#pragma once

#include <string>
#include <string_view>

#include "hedet/graph.hpp"

namespace hedet {

// Standard graph6 encoding (short form for n <= 62, '~'-prefixed long form
// above that). Parse errors carry the byte offset of the offending byte.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain text edge list: "n; i j; i j; ...". Whitespace is free, a trailing
// semicolon is allowed, "n" alone is the edgeless graph.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// Edge list when the text starts with a digit or contains ';', graph6
// otherwise (graph6 never starts with a digit).
Graph parse_graph_text(std::string_view text);

} // namespace hedet
