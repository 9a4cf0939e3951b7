#include "hedet/pairsets.hpp"

#include <algorithm>
#include <random>

#include "hedet/coloring.hpp"
#include "hedet/errors.hpp"

namespace hedet {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_params(int k, int n, int nprime) {
    if (k < 2) throw ParameterError("pair sets need k >= 2");
    if (n < 1 || nprime < 1) throw ParameterError("pair sets need n, n' >= 1");
    if (pair_count(n) > 63 || pair_count(nprime) > 63)
        throw ParameterError("pair sets store edge bitmasks, so n must stay below 12");
}

// glue v onto u (assumed nonadjacent) and renumber past v
Graph identify(const Graph& g, int u, int v) {
    std::vector<std::pair<int, int>> edges;
    auto remap = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    for (auto [a, b] : g.edges()) {
        int x = remap(a), y = remap(b);
        if (x != y) edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    return Graph::from_edges(g.order() - 1, edges);
}

// delta >= 1 and each deleted edge leaves a proper (k-1)-coloring that puts
// both endpoints in one class
bool recolors_around_every_edge(const Graph& g, int k) {
    if (g.order() == 0 || g.min_degree() < 1) return false;
    for (auto [u, v] : g.edges())
        if (!is_k_colorable(identify(g.minus_edge(u, v), u, v), k - 1)) return false;
    return true;
}

struct SideFacts {
    Graph graph{0};
    bool colorable = false; // (k-1)-colorable
    bool recolors = false;  // condition on every deleted edge
    bool free_vertex = false; // some (or vertex 1 in vertex1 mode) outside all (k-1)-cliques
    bool min_deg = false;   // delta >= k-1
    bool critical = false;
    int omega = 0;
};

SideFacts side_facts(const Graph& g, int k, bool vertex1) {
    SideFacts f;
    f.graph = g;
    f.colorable = is_k_colorable(g, k - 1);
    f.recolors = recolors_around_every_edge(g, k);
    f.free_vertex = vertex1 ? !vertex_in_clique(g, 1, k - 1)
                            : has_vertex_in_no_clique(g, k - 1);
    f.min_deg = g.min_degree() >= k - 1;
    f.critical = is_k_critical(g, k);
    f.omega = clique_number(g);
    return f;
}

enum class PairSetKind { w, v, vprime };

bool member(PairSetKind kind, const SideFacts& a, const SideFacts& b, int k,
            bool product_colorable) {
    if (!product_colorable) return false;
    if (kind == PairSetKind::w) return a.colorable || b.colorable;
    bool v = a.recolors && b.recolors && a.free_vertex && b.free_vertex &&
             std::max(a.omega, b.omega) <= k - 1 &&
             std::min(a.omega, b.omega) <= k - 2 && a.min_deg && b.min_deg;
    if (kind == PairSetKind::v) return v;
    return v && a.critical && b.critical;
}

GraphPairSet build_set(PairSetKind kind, int k, int n, int nprime,
                       const PairSetOptions& opts) {
    check_params(k, n, nprime);
    int bits_g = pair_count(n), bits_h = pair_count(nprime);
    GraphPairSet out;
    out.k = k;
    out.n = n;
    out.nprime = nprime;
    out.exhaustive = bits_g + bits_h <= opts.exhaustive_bit_cap;

    auto test = [&](const SideFacts& a, const SideFacts& b, GraphPair pair) {
        ++out.tested;
        bool x1 = is_k_colorable(tensor_product(a.graph, b.graph), k - 1);
        if (member(kind, a, b, k, x1)) out.members.push_back(pair);
    };

    if (out.exhaustive) {
        std::vector<SideFacts> gs(std::uint64_t(1) << bits_g);
        std::vector<SideFacts> hs(std::uint64_t(1) << bits_h);
        for (std::uint64_t m = 0; m < gs.size(); ++m)
            gs[m] = side_facts(graph_from_mask(n, m), k, opts.vertex1);
        for (std::uint64_t m = 0; m < hs.size(); ++m)
            hs[m] = side_facts(graph_from_mask(nprime, m), k, opts.vertex1);
        for (std::uint64_t gm = 0; gm < gs.size(); ++gm)
            for (std::uint64_t hm = 0; hm < hs.size(); ++hm)
                test(gs[gm], hs[hm], {gm, hm});
    } else {
        std::mt19937_64 rng(opts.seed);
        auto draw = [&](int bits) {
            return rng() & ((std::uint64_t(1) << bits) - 1);
        };
        for (std::uint64_t t = 0; t < opts.samples; ++t) {
            GraphPair pair{draw(bits_g), draw(bits_h)};
            test(side_facts(graph_from_mask(n, pair.g), k, opts.vertex1),
                 side_facts(graph_from_mask(nprime, pair.h), k, opts.vertex1),
                 pair);
        }
        std::sort(out.members.begin(), out.members.end());
        out.members.erase(std::unique(out.members.begin(), out.members.end()),
                          out.members.end());
    }
    return out;
}

} // namespace

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    int b = 0;
    for (int i = 1; i <= g.order(); ++i)
        for (int j = i + 1; j <= g.order(); ++j, ++b)
            if (g.adjacent(i, j)) mask |= std::uint64_t(1) << b;
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int b = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++b)
            if (mask >> b & 1) g.add_edge(i, j);
    return g;
}

GraphPairSet build_W_set(int k, int n, int nprime, const PairSetOptions& opts) {
    return build_set(PairSetKind::w, k, n, nprime, opts);
}

GraphPairSet build_V_set(int k, int n, int nprime, const PairSetOptions& opts) {
    return build_set(PairSetKind::v, k, n, nprime, opts);
}

GraphPairSet build_Vprime_set(int k, int n, int nprime, const PairSetOptions& opts) {
    return build_set(PairSetKind::vprime, k, n, nprime, opts);
}

bool check_prop41(int k, int n, int nprime, const PairSetOptions& opts) {
    check_params(k, n, nprime);
    if (pair_count(n) + pair_count(nprime) > opts.exhaustive_bit_cap)
        throw ParameterError("check_prop41 needs the exhaustive regime; raise "
                             "exhaustive_bit_cap or shrink n, n'");
    GraphPairSet w = build_W_set(k, n, nprime, opts);
    GraphPairSet v = build_V_set(k, n, nprime, opts);
    GraphPairSet vp = build_Vprime_set(k, n, nprime, opts);
    return std::includes(w.members.begin(), w.members.end(), v.members.begin(),
                         v.members.end()) &&
           std::includes(w.members.begin(), w.members.end(), vp.members.begin(),
                         vp.members.end());
}

} // namespace hedet
