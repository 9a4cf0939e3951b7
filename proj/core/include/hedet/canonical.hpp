#pragma once

#include <cstdint>
#include <vector>

#include "hedet/graph.hpp"

namespace hedet {

// Canonical key for graphs on at most 8 vertices: the vertex count in the
// high half and, in the low half, the lexicographically least upper-triangle
// bitstring (column-major, columns 2..n) over all vertex relabelings. Equal
// keys mean isomorphic graphs.
using CanonKey = std::uint64_t;

CanonKey canonical_form(const Graph& g);

// The graph realizing canonical_form(g); canonical_representative twice is
// the identity.
Graph canonical_representative(const Graph& g);

Graph graph_from_canon_key(CanonKey key);

// All isomorphism classes on n vertices (n <= 8), canonical representatives
// sorted by key.
std::vector<Graph> enumerate_graphs(int n);

// Exact isomorphism test by backtracking; intended for small graphs
// (roughly n <= 12).
bool are_isomorphic(const Graph& g, const Graph& h);

} // namespace hedet
