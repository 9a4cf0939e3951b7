#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hedet {

// Simple undirected graph on vertices 1..n, adjacency kept as bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n); // pre: n >= 3
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const; // edge count

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int min_degree() const; // 0 for the empty graph
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const; // (i<j), row-major

    Graph minus_edge(int u, int v) const;
    Graph minus_vertex(int v) const; // remaining vertices renumbered 1..n-1
    Graph induced(const std::vector<int>& vertices) const;

    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph&) const = default;

    // raw row access for solvers: words per row, row v starts at row(v)
    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + (v - 1) * words_; }

private:
    void check_vertex(int v) const;
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Disjoint union of g and h plus all edges between them; g keeps labels
// 1..|g|, h is shifted to |g|+1..|g|+|h|.
Graph join(const Graph& g, const Graph& h);

// Tensor (categorical) product: (u,u') ~ (v,v') iff u~v and u'~v'.
// Vertex (i,i') of the product gets label (i-1)*|h| + i'.
Graph tensor_product(const Graph& g, const Graph& h);

// Mycielski construction: vertices 1..n keep g, n+i shadows vertex i,
// 2n+1 is the hub adjacent to every shadow.
Graph mycielskian(const Graph& g);

} // namespace hedet
