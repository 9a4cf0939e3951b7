#include "hedet/variable.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

constexpr std::array<std::string_view, 7> kTagNames = {"e", "f", "x", "y",
                                                       "z", "xt", "yt"};

std::uint64_t pack(VarTag t, int a, int b, int c) {
    return (static_cast<std::uint64_t>(t) << 48) |
           (static_cast<std::uint64_t>(a) << 32) |
           (static_cast<std::uint64_t>(b) << 16) | static_cast<std::uint64_t>(c);
}

void require(bool ok, const char* msg) {
    if (!ok) throw ParameterError(msg);
}

void check_index(int v) { require(v >= 1 && v <= 0xffff, "variable index out of range"); }

} // namespace

std::string_view tag_name(VarTag t) { return kTagNames[static_cast<int>(t)]; }

std::optional<VarTag> tag_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i)
        if (kTagNames[i] == s) return static_cast<VarTag>(i);
    return std::nullopt;
}

Variable Variable::e(int i, int j) {
    check_index(i);
    check_index(j);
    require(i < j, "edge variable needs i < j");
    return Variable(pack(VarTag::E, i, j, 0));
}

Variable Variable::f(int i, int j) {
    check_index(i);
    check_index(j);
    require(i < j, "edge variable needs i < j");
    return Variable(pack(VarTag::F, i, j, 0));
}

Variable Variable::x(int i) {
    check_index(i);
    return Variable(pack(VarTag::X, i, 0, 0));
}

Variable Variable::y(int i) {
    check_index(i);
    return Variable(pack(VarTag::Y, i, 0, 0));
}

Variable Variable::z(int i, int j) {
    check_index(i);
    check_index(j);
    return Variable(pack(VarTag::Z, i, j, 0));
}

Variable Variable::xt(int p, int q, int l) {
    check_index(p);
    check_index(q);
    check_index(l);
    require(p < q, "deleted-edge variable needs p < q");
    return Variable(pack(VarTag::XT, p, q, l));
}

Variable Variable::yt(int p, int q, int l) {
    check_index(p);
    check_index(q);
    check_index(l);
    require(p < q, "deleted-edge variable needs p < q");
    return Variable(pack(VarTag::YT, p, q, l));
}

std::string Variable::name() const {
    std::string out(tag_name(tag()));
    out += '_';
    out += std::to_string(i1());
    if (i2() != 0) {
        out += '_';
        out += std::to_string(i2());
    }
    if (i3() != 0) {
        out += '_';
        out += std::to_string(i3());
    }
    return out;
}

std::optional<Variable> Variable::parse(std::string_view name) {
    auto us = name.find('_');
    if (us == std::string_view::npos || us == 0) return std::nullopt;
    auto tag = tag_from_name(name.substr(0, us));
    if (!tag) return std::nullopt;

    std::array<int, 3> idx = {0, 0, 0};
    std::size_t count = 0;
    std::string_view rest = name.substr(us + 1);
    while (!rest.empty()) {
        if (count == 3) return std::nullopt;
        auto next = rest.find('_');
        std::string_view tok =
            next == std::string_view::npos ? rest : rest.substr(0, next);
        int value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size() || value < 1)
            return std::nullopt;
        idx[count++] = value;
        rest = next == std::string_view::npos ? std::string_view{}
                                              : rest.substr(next + 1);
        if (next != std::string_view::npos && rest.empty()) return std::nullopt;
    }

    try {
        switch (*tag) {
        case VarTag::E: return count == 2 ? std::optional(e(idx[0], idx[1])) : std::nullopt;
        case VarTag::F: return count == 2 ? std::optional(f(idx[0], idx[1])) : std::nullopt;
        case VarTag::X: return count == 1 ? std::optional(x(idx[0])) : std::nullopt;
        case VarTag::Y: return count == 1 ? std::optional(y(idx[0])) : std::nullopt;
        case VarTag::Z: return count == 2 ? std::optional(z(idx[0], idx[1])) : std::nullopt;
        case VarTag::XT: return count == 3 ? std::optional(xt(idx[0], idx[1], idx[2])) : std::nullopt;
        case VarTag::YT: return count == 3 ? std::optional(yt(idx[0], idx[1], idx[2])) : std::nullopt;
        }
    } catch (const ParameterError&) {
        return std::nullopt;
    }
    return std::nullopt;
}

VarUniverse VarUniverse::of(std::vector<Variable> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    VarUniverse u;
    u.vars_ = std::move(vars);
    return u;
}

namespace {

void check_ring_params(int k, int n, int nprime) {
    require(k >= 2, "k must be at least 2");
    require(n >= 1 && nprime >= 1, "graph orders must be at least 1");
    require(n <= 0xffff && nprime <= 0xffff, "graph order out of range");
}

void append_edge_vars(std::vector<Variable>& vars, int n, bool left) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            vars.push_back(left ? Variable::e(i, j) : Variable::f(i, j));
}

void append_z_vars(std::vector<Variable>& vars, int n, int nprime) {
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= nprime; ++j) vars.push_back(Variable::z(i, j));
}

} // namespace

VarUniverse VarUniverse::w_ring(int k, int n, int nprime) {
    check_ring_params(k, n, nprime);
    std::vector<Variable> vars;
    append_edge_vars(vars, n, true);
    append_edge_vars(vars, nprime, false);
    for (int i = 1; i <= n; ++i) vars.push_back(Variable::x(i));
    for (int i = 1; i <= nprime; ++i) vars.push_back(Variable::y(i));
    append_z_vars(vars, n, nprime);
    return of(std::move(vars));
}

VarUniverse VarUniverse::v_ring(int k, int n, int nprime) {
    check_ring_params(k, n, nprime);
    std::vector<Variable> vars;
    append_edge_vars(vars, n, true);
    append_edge_vars(vars, nprime, false);
    append_z_vars(vars, n, nprime);
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int l = 1; l <= n; ++l) vars.push_back(Variable::xt(p, q, l));
    for (int p = 1; p <= nprime; ++p)
        for (int q = p + 1; q <= nprime; ++q)
            for (int l = 1; l <= nprime; ++l) vars.push_back(Variable::yt(p, q, l));
    return of(std::move(vars));
}

VarUniverse VarUniverse::pair_ring(int n, int nprime) {
    check_ring_params(2, n, nprime);
    std::vector<Variable> vars;
    append_edge_vars(vars, n, true);
    append_edge_vars(vars, nprime, false);
    append_z_vars(vars, n, nprime);
    return of(std::move(vars));
}

bool VarUniverse::contains(Variable v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

std::optional<std::size_t> VarUniverse::index_of(Variable v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::vector<Variable> VarUniverse::with_tags(std::span<const VarTag> tags) const {
    std::vector<Variable> out;
    for (Variable v : vars_)
        for (VarTag t : tags)
            if (v.tag() == t) {
                out.push_back(v);
                break;
            }
    return out;
}

} // namespace hedet
