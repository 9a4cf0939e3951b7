#include "hedet/graph.hpp"

#include <algorithm>
#include <bit>

#include "hedet/errors.hpp"

namespace hedet {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
    if (n < 0) throw ParameterError("graph order must be nonnegative");
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n, 1);
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw ParameterError("vertex label out of range");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[(v - 1) >> 6] >> ((v - 1) & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ParameterError("no self-loops");
    bits_[std::size_t(u - 1) * words_ + ((v - 1) >> 6)] |= 1ull << ((v - 1) & 63);
    bits_[std::size_t(v - 1) * words_ + ((u - 1) >> 6)] |= 1ull << ((u - 1) & 63);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[std::size_t(u - 1) * words_ + ((v - 1) >> 6)] &= ~(1ull << ((v - 1) & 63));
    bits_[std::size_t(v - 1) * words_ + ((u - 1) >> 6)] &= ~(1ull << ((u - 1) & 63));
}

int Graph::size() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(1);
    for (int v = 2; v <= n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = row(v)[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b + 1);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j : neighbors(i))
            if (j > i) out.push_back({i, j});
    return out;
}

Graph Graph::minus_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::minus_vertex(int v) const {
    check_vertex(v);
    std::vector<int> keep;
    for (int i = 1; i <= n_; ++i)
        if (i != v) keep.push_back(i);
    return induced(keep);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b]))
                g.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_ + 1, 0);
    for (int s = 1; s <= n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    for (int u = 1; u <= g.order(); ++u)
        for (int v = 1; v <= h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph tensor_product(const Graph& g, const Graph& h) {
    Graph out(g.order() * h.order());
    auto label = [&](int i, int ip) { return (i - 1) * h.order() + ip; };
    for (auto [u, v] : g.edges())
        for (auto [up, vp] : h.edges()) {
            out.add_edge(label(u, up), label(v, vp));
            out.add_edge(label(u, vp), label(v, up));
        }
    return out;
}

Graph mycielskian(const Graph& g) {
    int n = g.order();
    Graph out(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        out.add_edge(u, v);
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
    }
    for (int i = 1; i <= n; ++i) out.add_edge(n + i, 2 * n + 1);
    return out;
}

} // namespace hedet
