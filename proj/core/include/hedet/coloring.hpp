#pragma once

#include <cstdint>
#include <optional>

#include "hedet/graph.hpp"

namespace hedet {

enum class Tristate { yes, no, unknown };

struct ColoringOptions {
    // Backtracking node budget; `unknown` when exhausted. The default is high
    // enough that every graph this project decides finishes exactly.
    std::uint64_t node_cap = 4'000'000'000ull;
};

// Exact k-colorability: bipartite test for k = 2, saturation-guided
// backtracking with component decomposition above. Never wrong, possibly
// `unknown` when the node budget runs out.
Tristate k_colorable(const Graph& g, int k, const ColoringOptions& opts = {});

// Convenience wrapper that insists on a decision (throws on unknown).
bool is_k_colorable(const Graph& g, int k, const ColoringOptions& opts = {});

int chromatic_number(const Graph& g, const ColoringOptions& opts = {});

// k-critical: chi(g) = k and removing any edge or any vertex drops chi below k.
// chi(g) == k and deleting any single vertex drops the chromatic number.
bool is_k_critical(const Graph& g, int k, const ColoringOptions& opts = {});

int clique_number(const Graph& g);
// Largest clique found by a greedy sweep; a valid lower bound for chi.
int greedy_clique_bound(const Graph& g);
bool is_triangle_free(const Graph& g);
// Does vertex v lie in some clique of size s (counting v itself)?
bool vertex_in_clique(const Graph& g, int v, int s);
bool has_vertex_in_no_clique(const Graph& g, int s);

} // namespace hedet
