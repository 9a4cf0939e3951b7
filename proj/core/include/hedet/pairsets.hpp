#pragma once

#include <cstdint>
#include <vector>

#include "hedet/graph.hpp"

namespace hedet {

// A labeled graph pair packed as two edge bitmasks. Bit b of each mask is the
// b-th potential edge in the row-major order over i < j, the same order
// Graph::edges uses.
struct GraphPair {
    std::uint64_t g = 0;
    std::uint64_t h = 0;
    friend auto operator<=>(const GraphPair&, const GraphPair&) = default;
};

struct GraphPairSet {
    int k = 0;
    int n = 0;
    int nprime = 0;
    bool exhaustive = true;   // false when membership was sampled
    std::uint64_t tested = 0; // pairs examined
    std::vector<GraphPair> members; // sorted, duplicate free
};

struct PairSetOptions {
    // The algebraic encoding pins vertex 1 as the one outside every small
    // clique; the set conditions only ask that some vertex qualifies. Flip
    // this to mirror the algebra instead of the literal condition.
    bool vertex1 = false;
    int exhaustive_bit_cap = 14;    // enumerate fully while the pair space fits 2^cap
    std::uint64_t samples = 16384;  // pairs drawn once past the cap
    std::uint64_t seed = 2023;
};

std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

// Pairs whose product is (k-1)-colorable and where one side already is.
GraphPairSet build_W_set(int k, int n, int nprime, const PairSetOptions& opts = {});
// Pairs whose product is (k-1)-colorable while both sides look like minimal
// counterexamples: recolorable around every edge, a vertex outside all
// (k-1)-cliques, small clique numbers, minimum degree k-1.
GraphPairSet build_V_set(int k, int n, int nprime, const PairSetOptions& opts = {});
// The V pairs whose sides are both k-critical.
GraphPairSet build_Vprime_set(int k, int n, int nprime, const PairSetOptions& opts = {});

// V inside W and V' inside W, decided combinatorially on exhaustive sizes.
bool check_prop41(int k, int n, int nprime, const PairSetOptions& opts = {});

} // namespace hedet
