#include "hedet/named_graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <utility>

#include "hedet/canonical.hpp"
#include "hedet/coloring.hpp"
#include "hedet/errors.hpp"

namespace hedet {

namespace {

using EdgeVec = std::vector<std::pair<int, int>>;

} // namespace

Graph h0() {
    static const EdgeVec edges{{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5},
                               {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
    return Graph::from_edges(7, edges);
}

Graph h_star() {
    static const EdgeVec edges{
        {1, 2}, {1, 3}, {1, 7}, {2, 4}, {2, 8}, {3, 4}, {3, 6},
        {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8},
        {1, 9}, {2, 9}, {5, 9}, {6, 9},
        {3, 10}, {4, 10}, {7, 10}, {8, 10}, {9, 10},
        {1, 11}, {2, 11}, {3, 11}, {4, 11}, {5, 11}, {6, 11}, {7, 11}, {8, 11}};
    return Graph::from_edges(11, edges);
}

Graph grotzsch() { return mycielskian(Graph::cycle(5)); }

const std::vector<Graph>& a4_family() {
    static const std::vector<Graph> family = [] {
        std::vector<Graph> found;
        for (const Graph& g : enumerate_graphs(7))
            if (is_k_critical(g, 4)) found.push_back(g);
        Graph base = h0();
        for (std::size_t i = 0; i < found.size(); ++i)
            if (are_isomorphic(found[i], base)) {
                std::rotate(found.begin(), found.begin() + i, found.begin() + i + 1);
                break;
            }
        return found;
    }();
    return family;
}

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

Graph atom_graph(std::string_view raw) {
    std::string name = upper(raw);
    if (name.empty()) throw ParameterError("empty graph name");
    if (name == "HSTAR") return h_star();
    if (name == "GROTZSCH") return grotzsch();
    if (name.size() == 2 && name[0] == 'H' && name[1] >= '0' && name[1] <= '6')
        return a4_family()[name[1] - '0'];
    if (name[0] == 'K' || name[0] == 'C') {
        int n = 0;
        auto res = std::from_chars(name.data() + 1, name.data() + name.size(), n);
        if (res.ec == std::errc{} && res.ptr == name.data() + name.size()) {
            if (name[0] == 'K') {
                if (n < 1) throw ParameterError("complete graph needs at least 1 vertex");
                return Graph::complete(n);
            }
            if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
            return Graph::cycle(n);
        }
    }
    throw ParameterError("unknown graph name: " + std::string(raw));
}

} // namespace

Graph graph_from_name(std::string_view name) {
    // strip spaces, then split on '+' and join left to right
    std::string flat;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) flat.push_back(c);
    if (flat.empty()) throw ParameterError("empty graph name");

    Graph acc;
    std::size_t start = 0;
    bool first = true;
    while (start <= flat.size()) {
        std::size_t plus = flat.find('+', start);
        std::string_view tok(flat.data() + start,
                             (plus == std::string::npos ? flat.size() : plus) - start);
        Graph next = atom_graph(tok);
        acc = first ? std::move(next) : join(acc, next);
        first = false;
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return acc;
}

} // namespace hedet
