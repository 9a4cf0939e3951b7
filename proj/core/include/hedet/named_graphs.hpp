#pragma once

#include <string_view>
#include <vector>

#include "hedet/graph.hpp"

namespace hedet {

// The 7-vertex graph H0: 4-chromatic, every proper subgraph 3-colorable,
// vertex 1 lies in no triangle.
Graph h0();

// The 11-vertex graph Hstar: 5-chromatic with clique number 3.
Graph h_star();

// Mycielskian of the 5-cycle: triangle-free and 4-chromatic.
Graph grotzsch();

// All seven 4-critical graphs on 7 vertices, H0 first and the rest in
// canonical key order. Computed once and cached.
const std::vector<Graph>& a4_family();

// Named graph expressions: K<n>, C<n>, H0..H6, Hstar, Grotzsch, joined
// left to right with '+'. Case-insensitive. Throws ParameterError for
// anything it does not recognize.
Graph graph_from_name(std::string_view name);

} // namespace hedet
