#include "hedet/graph6.hpp"

#include <cctype>
#include <charconv>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

std::string_view trimmed(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

int g6_byte(std::string_view s, std::size_t at, std::size_t base) {
    if (at >= s.size()) throw ParseError("graph6 data ends early", base + at);
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
        throw ParseError("byte outside the graph6 alphabet", base + at);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    std::string_view s = trimmed(text, &base);
    if (s.empty()) throw ParseError("empty graph6 text", 0);

    std::size_t at = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw ParseError("graph6 order beyond supported range", base + 1);
        n = 0;
        for (at = 1; at <= 3; ++at) n = (n << 6) | g6_byte(s, at, base);
    } else {
        n = g6_byte(s, 0, base);
        at = 1;
    }
    if (n > 1000) throw ParseError("graph6 order beyond supported range", base);

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size() - at) != need)
        throw ParseError("graph6 data has the wrong length", base + s.size());
    long long t = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++t) {
            int b = g6_byte(s, at + t / 6, base);
            if ((b >> (5 - t % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    for (long long r = bits; r < need * 6; ++r)
        if ((g6_byte(s, at + r / 6, base) >> (5 - r % 6)) & 1)
            throw ParseError("nonzero padding in graph6 data", base + at + r / 6);
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        if (n > 258047) throw ParameterError("graph too large for graph6");
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, fill = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                fill = 0;
            }
        }
    if (fill > 0) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
    return out;
}

namespace {

int parse_int_field(std::string_view s, std::size_t& at, std::size_t base,
                    const char* what) {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    std::size_t start = at;
    while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
    int value = 0;
    auto res = std::from_chars(s.data() + start, s.data() + at, value);
    if (start == at || res.ec != std::errc{})
        throw ParseError(std::string("expected ") + what, base + start);
    return value;
}

void skip_ws(std::string_view s, std::size_t& at) {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t base = 0;
    std::string_view s = trimmed(text, &base);
    if (s.empty()) throw ParseError("empty edge list", 0);

    std::size_t at = 0;
    int n = parse_int_field(s, at, base, "vertex count");
    Graph g(n);
    skip_ws(s, at);
    while (at < s.size()) {
        if (s[at] != ';')
            throw ParseError("expected ';' between edge list fields", base + at);
        ++at;
        skip_ws(s, at);
        if (at == s.size()) break; // trailing semicolon
        int u = parse_int_field(s, at, base, "edge endpoint");
        int v = parse_int_field(s, at, base, "edge endpoint");
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw ParseError("edge endpoint out of range", base + at);
        g.add_edge(u, v);
        skip_ws(s, at);
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    for (auto [u, v] : g.edges()) {
        out += "; ";
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

Graph parse_graph_text(std::string_view text) {
    std::string_view s = trimmed(text);
    bool edge_list = !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) ||
                                    s.find(';') != std::string_view::npos);
    return edge_list ? parse_edge_list(text) : parse_graph6(text);
}

} // namespace hedet
