#include "hedet/coloring.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

struct CapSignal {};

bool bipartite(const Graph& g) {
    std::vector<int> side(g.order() + 1, 0);
    for (int s = 1; s <= g.order(); ++s) {
        if (side[s] != 0) continue;
        side[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (side[u] == 0) {
                    side[u] = -side[v];
                    q.push(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Saturation-guided backtracking on one connected component. Colors are
// 1..k as bits; a vertex may open at most one fresh color (the lowest), which
// breaks color-permutation symmetry.
class Solver {
public:
    Solver(const Graph& g, int k, std::uint64_t* budget)
        : n_(g.order()), k_(k), budget_(budget), forbidden_(n_ + 1, 0),
          color_(n_ + 1, 0), uncolored_deg_(n_ + 1, 0) {
        adj_.resize(n_ + 1);
        for (int v = 1; v <= n_; ++v) {
            adj_[v] = g.neighbors(v);
            uncolored_deg_[v] = static_cast<int>(adj_[v].size());
        }
    }

    bool solve(int colored, int used) {
        if (colored == n_) return true;
        if (*budget_ == 0) throw CapSignal{};
        --*budget_;

        int v = pick(used);
        std::uint64_t avail = ~forbidden_[v] & mask(std::min(k_, used + 1));
        if (avail == 0) return false;
        for (int u : adj_[v]) --uncolored_deg_[u];
        while (avail) {
            int c = std::countr_zero(avail) + 1;
            avail &= avail - 1;
            color_[v] = c;
            std::uint64_t bit = 1ull << (c - 1);
            std::vector<int> touched;
            touched.reserve(adj_[v].size());
            for (int u : adj_[v])
                if (color_[u] == 0 && !(forbidden_[u] & bit)) {
                    forbidden_[u] |= bit;
                    touched.push_back(u);
                }
            if (solve(colored + 1, std::max(used, c))) return true;
            for (int u : touched) forbidden_[u] &= ~bit;
            color_[v] = 0;
        }
        for (int u : adj_[v]) ++uncolored_deg_[u];
        return false;
    }

private:
    static std::uint64_t mask(int k) {
        return k >= 64 ? ~0ull : (1ull << k) - 1;
    }

    // Most saturated uncolored vertex; ties by uncolored degree then index.
    int pick(int used) const {
        int best = -1, best_sat = -1, best_deg = -1;
        std::uint64_t m = mask(std::min(k_, used + 1));
        for (int v = 1; v <= n_; ++v) {
            if (color_[v] != 0) continue;
            int sat = std::popcount(forbidden_[v] & m);
            if (sat > best_sat ||
                (sat == best_sat && uncolored_deg_[v] > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = uncolored_deg_[v];
            }
        }
        return best;
    }

    int n_, k_;
    std::uint64_t* budget_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<int> color_;
    std::vector<int> uncolored_deg_;
    std::vector<std::vector<int>> adj_;
};

} // namespace

Tristate k_colorable(const Graph& g, int k, const ColoringOptions& opts) {
    if (k < 0) throw ParameterError("color count must be nonnegative");
    if (g.order() == 0) return Tristate::yes;
    if (k == 0) return Tristate::no;
    if (k >= g.order()) return Tristate::yes;
    if (g.size() == 0) return Tristate::yes;
    if (k == 1) return Tristate::no; // has an edge
    if (k == 2) return bipartite(g) ? Tristate::yes : Tristate::no;
    if (k > 62) throw ParameterError("color count beyond solver width");

    std::uint64_t budget = opts.node_cap;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) <= k) continue;
        Graph sub = g.induced(comp);
        if (greedy_clique_bound(sub) > k) return Tristate::no;
        try {
            Solver solver(sub, k, &budget);
            if (!solver.solve(0, 0)) return Tristate::no;
        } catch (const CapSignal&) {
            return Tristate::unknown;
        }
    }
    return Tristate::yes;
}

bool is_k_colorable(const Graph& g, int k, const ColoringOptions& opts) {
    switch (k_colorable(g, k, opts)) {
    case Tristate::yes: return true;
    case Tristate::no: return false;
    default:
        throw ParameterError("coloring search exhausted its node budget");
    }
}

int chromatic_number(const Graph& g, const ColoringOptions& opts) {
    if (g.order() == 0) return 0;
    if (g.size() == 0) return 1;
    int lb = std::max(2, greedy_clique_bound(g));
    for (int k = lb;; ++k)
        if (is_k_colorable(g, k, opts)) return k;
}

bool is_k_critical(const Graph& g, int k, const ColoringOptions& opts) {
    if (k < 1) throw ParameterError("criticality needs k >= 1");
    if (chromatic_number(g, opts) != k) return false;
    for (int v = 1; v <= g.order(); ++v)
        if (!is_k_colorable(g.minus_vertex(v), k - 1, opts)) return false;
    return true;
}

namespace {

// Exact max clique on <= 64 vertices: branch and bound over neighbor masks.
struct CliqueSearch {
    std::vector<std::uint64_t> nbr;
    int best = 0;

    void extend(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            extend(cand & nbr[v], size + 1);
        }
    }
};

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    if (g.order() > 64) throw ParameterError("exact clique search limited to 64 vertices");
    std::vector<std::uint64_t> nbr(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u - 1] |= 1ull << (v - 1);
        nbr[v - 1] |= 1ull << (u - 1);
    }
    return nbr;
}

} // namespace

int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    CliqueSearch search;
    search.nbr = neighbor_masks(g);
    search.best = greedy_clique_bound(g);
    search.extend((g.order() == 64) ? ~0ull : (1ull << g.order()) - 1, 0);
    return search.best;
}

int greedy_clique_bound(const Graph& g) {
    if (g.order() == 0) return 0;
    std::vector<int> verts(g.order());
    for (int i = 0; i < g.order(); ++i) verts[i] = i + 1;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    int best = 1;
    for (int seed : verts) {
        std::vector<int> clique{seed};
        for (int u : verts) {
            if (u == seed) continue;
            bool ok = true;
            for (int c : clique)
                if (!g.adjacent(u, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(u);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (int w = 0; w < g.words(); ++w)
            if (g.row(u)[w] & g.row(v)[w]) return false;
    return true;
}

bool vertex_in_clique(const Graph& g, int v, int s) {
    if (s < 1) throw ParameterError("clique size must be positive");
    if (s == 1) return true;
    auto nbr = neighbor_masks(g);
    // search a clique of size s-1 inside N(v)
    CliqueSearch search;
    search.nbr = nbr;
    search.best = 0;
    search.extend(nbr[v - 1], 0);
    return search.best >= s - 1;
}

bool has_vertex_in_no_clique(const Graph& g, int s) {
    for (int v = 1; v <= g.order(); ++v)
        if (!vertex_in_clique(g, v, s)) return true;
    return false;
}

} // namespace hedet
