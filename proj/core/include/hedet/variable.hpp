#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hedet {

// Variable families of the two coloring rings:
//   e_i_j   edge indicator of the left graph, 1 <= i < j <= n
//   f_i_j   edge indicator of the right graph, 1 <= i < j <= n'
//   x_i     vertex color of the left graph (root-of-unity valued)
//   y_i     vertex color of the right graph
//   z_i_j   color of product vertex (i, j)
//   xt_p_q_l, yt_p_q_l   per-edge-deletion colorings (l-th vertex color in
//                        the graph with candidate edge {p,q} removed)
enum class VarTag : std::uint8_t { E = 0, F, X, Y, Z, XT, YT };

std::string_view tag_name(VarTag t);
std::optional<VarTag> tag_from_name(std::string_view s);

// A variable packed into one word: tag then up to three 1-based indices.
// The natural (operator<) order is the global enumeration order: E-block by
// (i,j) lexicographic, then F, X, Y, Z, XT, YT. Earlier variables are
// considered greater by every monomial order in order.hpp.
class Variable {
public:
    static Variable e(int i, int j);
    static Variable f(int i, int j);
    static Variable x(int i);
    static Variable y(int i);
    static Variable z(int i, int j);
    static Variable xt(int p, int q, int l);
    static Variable yt(int p, int q, int l);

    VarTag tag() const { return static_cast<VarTag>(key_ >> 48); }
    int i1() const { return static_cast<int>((key_ >> 32) & 0xffff); }
    int i2() const { return static_cast<int>((key_ >> 16) & 0xffff); }
    int i3() const { return static_cast<int>(key_ & 0xffff); }

    std::string name() const;
    static std::optional<Variable> parse(std::string_view name);

    auto operator<=>(const Variable&) const = default;
    std::uint64_t key() const { return key_; }

private:
    explicit Variable(std::uint64_t key) : key_(key) {}
    std::uint64_t key_;
};

// An ordered, duplicate-free set of variables. Polynomial operands are
// expected to live over a common universe; enumeration order is the natural
// Variable order.
class VarUniverse {
public:
    VarUniverse() = default;
    static VarUniverse of(std::vector<Variable> vars);

    // Ring for the single-coloring encoding: e, f, x, y, z.
    static VarUniverse w_ring(int k, int n, int nprime);
    // Ring for the criticality encoding: e, f, z, xt, yt.
    static VarUniverse v_ring(int k, int n, int nprime);
    // Ring for fixed-pair ideals: e, f, z only.
    static VarUniverse pair_ring(int n, int nprime);

    std::span<const Variable> vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool contains(Variable v) const;
    std::optional<std::size_t> index_of(Variable v) const;

    // Subset of this universe with the given tags, in enumeration order.
    std::vector<Variable> with_tags(std::span<const VarTag> tags) const;

    bool operator==(const VarUniverse&) const = default;

private:
    std::vector<Variable> vars_;
};

} // namespace hedet
