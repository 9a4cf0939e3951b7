#include "hedet/canonical.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

constexpr int kMaxCanonOrder = 8;

int triangle(int n) { return n * (n - 1) / 2; }

// Branch and bound over vertex placements. The key being minimized reads the
// upper triangle column by column, earliest bit most significant, so a
// partial placement of p vertices fixes the first p*(p-1)/2 bits and the
// search can discard any branch whose prefix already exceeds the best known.
struct CanonSearch {
    int n = 0;
    int total_bits = 0;
    std::uint64_t adj[kMaxCanonOrder] = {};
    int order[kMaxCanonOrder] = {}; // candidate iteration order
    int pos[kMaxCanonOrder] = {};
    std::uint64_t best = 0;

    std::uint64_t value_of(const int* perm) const {
        std::uint64_t v = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                v = (v << 1) | ((adj[perm[i]] >> perm[j]) & 1);
        return v;
    }

    void rec(int p, std::uint64_t prefix, std::uint64_t used) {
        if (p >= n || p >= kMaxCanonOrder) {
            if (prefix < best) best = prefix;
            return;
        }
        for (int t = 0; t < n; ++t) {
            int v = order[t];
            if (used & (1ull << v)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < p; ++i)
                col = (col << 1) | ((adj[pos[i]] >> v) & 1);
            std::uint64_t next = (prefix << p) | col;
            int placed_bits = triangle(p + 1);
            if (next > (best >> (total_bits - placed_bits))) continue;
            pos[p] = v;
            rec(p + 1, next, used | (1ull << v));
        }
    }
};

} // namespace

CanonKey canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonOrder) throw ParameterError("canonical form limited to 8 vertices");
    if (n <= 1) return static_cast<CanonKey>(n) << 32;

    CanonSearch s;
    s.n = n;
    s.total_bits = triangle(n);
    for (auto [u, v] : g.edges()) {
        s.adj[u - 1] |= 1ull << (v - 1);
        s.adj[v - 1] |= 1ull << (u - 1);
    }
    // low-degree vertices first tends to reach small bitstrings early
    for (int i = 0; i < n; ++i) s.order[i] = i;
    std::sort(s.order, s.order + n, [&](int a, int b) {
        int da = std::popcount(s.adj[a]), db = std::popcount(s.adj[b]);
        return da != db ? da < db : a < b;
    });
    s.best = s.value_of(s.order);
    s.rec(0, 0, 0);
    return (static_cast<CanonKey>(n) << 32) | s.best;
}

Graph graph_from_canon_key(CanonKey key) {
    int n = static_cast<int>(key >> 32);
    if (n > kMaxCanonOrder) throw ParameterError("bad canonical key");
    std::uint64_t bits = key & 0xffffffffull;
    int total = triangle(n);
    Graph g(n);
    int t = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++t)
            if ((bits >> (total - 1 - t)) & 1) g.add_edge(i, j);
    return g;
}

Graph canonical_representative(const Graph& g) {
    return graph_from_canon_key(canonical_form(g));
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > kMaxCanonOrder)
        throw ParameterError("graph enumeration supports 1 to 8 vertices");
    std::vector<Graph> classes{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<CanonKey> keys;
        for (const Graph& g : classes) {
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int b = 0; b < m - 1; ++b)
                    if (mask & (1u << b)) h.add_edge(b + 1, m);
                keys.insert(canonical_form(h));
            }
        }
        classes.clear();
        classes.reserve(keys.size());
        for (CanonKey k : keys) classes.push_back(graph_from_canon_key(k));
    }
    return classes;
}

namespace {

bool iso_rec(const Graph& g, const Graph& h, const std::vector<int>& order,
             std::vector<int>& map, std::vector<bool>& used, std::size_t p) {
    if (p == order.size()) return true;
    int gv = order[p];
    for (int hv = 1; hv <= h.order(); ++hv) {
        if (used[hv] || g.degree(gv) != h.degree(hv)) continue;
        bool ok = true;
        for (std::size_t q = 0; q < p; ++q) {
            if (g.adjacent(gv, order[q]) != h.adjacent(hv, map[order[q]])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[hv] = true;
        map[gv] = hv;
        if (iso_rec(g, h, order, map, used, p + 1)) return true;
        used[hv] = false;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    int n = g.order();
    std::vector<int> dg, dh;
    for (int v = 1; v <= n; ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<int> map(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    return iso_rec(g, h, order, map, used, 0);
}

} // namespace hedet
