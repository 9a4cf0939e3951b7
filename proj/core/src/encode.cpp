#include "hedet/encode.hpp"

#include <numeric>
#include <string>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

void check_kn(int k, int n, int nprime = 1) {
    if (k < 2) throw ParameterError("color parameter k must be at least 2");
    if (n < 1 || nprime < 1) throw ParameterError("vertex counts must be positive");
}

void need_k3(int k) {
    if (k < 3) throw ParameterError("this ideal family needs k >= 3");
}

Variable edge_var(Side s, int i, int j) {
    if (i > j) std::swap(i, j);
    return s == Side::g ? Variable::e(i, j) : Variable::f(i, j);
}

Variable color_var(Side s, int i) {
    return s == Side::g ? Variable::x(i) : Variable::y(i);
}

Variable aux_var(Side s, int p, int q, int l) {
    return s == Side::g ? Variable::xt(p, q, l) : Variable::yt(p, q, l);
}

std::vector<Variable> edge_vars(Side s, int n) {
    std::vector<Variable> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(edge_var(s, i, j));
    return out;
}

std::vector<Variable> aux_vars(Side s, int n) {
    std::vector<Variable> out;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int l = 1; l <= n; ++l) out.push_back(aux_var(s, p, q, l));
    return out;
}

Polynomial one() { return Polynomial::constant(rat(1)); }
Polynomial pvar(Variable v) { return Polynomial::var(v); }

// all m-subsets of {0,..,pool-1} in lexicographic order
template <class Fn>
void for_each_subset(int pool, int m, Fn&& fn) {
    if (m < 0 || m > pool) return;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int t = m - 1;
        while (t >= 0 && idx[t] == pool - m + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
    }
}

std::string tag3(const char* name, int k, int n, int nprime) {
    return std::string(name) + "(" + std::to_string(k) + "," + std::to_string(n) +
           "," + std::to_string(nprime) + ")";
}

std::string tag2(const char* name, int a, int b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// generator lists shared by both sides

std::vector<Polynomial> gens_binary_edges(Side s, int n) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Polynomial e = pvar(edge_var(s, i, j));
            out.push_back(e * e - e);
        }
    return out;
}

std::vector<Polynomial> gens_color_roots(Side s, int k, int n) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(pvar(color_var(s, i)).pow(k - 1) - one());
    return out;
}

std::vector<Polynomial> gens_proper(Side s, int k, int n) {
    std::vector<Polynomial> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back(pvar(edge_var(s, i, j)) *
                          geometric_sum(color_var(s, i), color_var(s, j), k - 2));
    return out;
}

Ideal side_ideal(Side s, int n, std::vector<Polynomial> gens, std::string prov,
                 bool with_aux = false, bool with_colors = false, int ncolors = 0) {
    std::vector<Variable> vars = edge_vars(s, n);
    if (with_colors)
        for (int i = 1; i <= ncolors; ++i) vars.push_back(color_var(s, i));
    if (with_aux) {
        auto aux = aux_vars(s, n);
        vars.insert(vars.end(), aux.begin(), aux.end());
    }
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       std::move(prov));
}

std::vector<Polynomial> gens_P(Side s, int k, int n) {
    std::vector<Polynomial> out;
    // (a) minimum degree >= 1: per vertex, not all incident indicators vanish
    for (int i = 1; i <= n; ++i) {
        Polynomial prod = one();
        for (int j = 1; j <= n; ++j)
            if (j != i) prod = prod * (pvar(edge_var(s, i, j)) - one());
        out.push_back(prod);
    }
    // (b) colors of G - pq, then the pins c(p) = c(q) = 1
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int i = 1; i <= n; ++i)
                out.push_back(pvar(aux_var(s, p, q, i)).pow(k - 1) - one());
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) {
            out.push_back(pvar(aux_var(s, p, q, p)) - one());
            out.push_back(pvar(aux_var(s, p, q, q)) - one());
        }
    // (c) every edge other than pq is properly colored
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    if (i == p && j == q) continue;
                    out.push_back(pvar(edge_var(s, p, q)) * pvar(edge_var(s, i, j)) *
                                  geometric_sum(aux_var(s, p, q, i),
                                                aux_var(s, p, q, j), k - 2));
                }
    return out;
}

std::vector<Polynomial> gens_Q(Side s, int k, int n) {
    std::vector<Polynomial> out;
    // pool = [n] minus vertex 1
    for_each_subset(n - 1, k - 2, [&](const std::vector<int>& idx) {
        Polynomial g = one();
        for (int a : idx) g = g * pvar(edge_var(s, 1, a + 2));
        for (std::size_t u = 0; u < idx.size(); ++u)
            for (std::size_t v = u + 1; v < idx.size(); ++v)
                g = g * pvar(edge_var(s, idx[u] + 2, idx[v] + 2));
        out.push_back(g);
    });
    return out;
}

std::vector<Polynomial> gens_R(Side s, int k, int n) {
    std::vector<Polynomial> out;
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        Polynomial g = one();
        for (std::size_t u = 0; u < idx.size(); ++u)
            for (std::size_t v = u + 1; v < idx.size(); ++v)
                g = g * pvar(edge_var(s, idx[u] + 1, idx[v] + 1));
        out.push_back(g);
    });
    return out;
}

std::vector<Polynomial> gens_S(Side s, int k, int n) {
    std::vector<Polynomial> out;
    int m = n - k + 1;
    if (m < 0) return out;
    for (int l = 1; l <= n; ++l) {
        std::vector<int> pool;
        for (int i = 1; i <= n; ++i)
            if (i != l) pool.push_back(i);
        for_each_subset(n - 1, m, [&](const std::vector<int>& idx) {
            Polynomial g = one();
            for (int a : idx) g = g * (pvar(edge_var(s, pool[a], l)) - one());
            out.push_back(g);
        });
    }
    return out;
}

} // namespace

Polynomial geometric_sum(Variable a, Variable b, int top) {
    if (top < 0) throw ParameterError("geometric sum needs a nonnegative top degree");
    Polynomial sum = Polynomial::zero();
    for (int t = 0; t <= top; ++t)
        sum = sum + pvar(a).pow(top - t) * pvar(b).pow(t);
    return sum;
}

Ideal ideal_E(int n, int nprime) {
    check_kn(2, n, nprime);
    auto gens = gens_binary_edges(Side::g, n);
    auto more = gens_binary_edges(Side::h, nprime);
    gens.insert(gens.end(), more.begin(), more.end());
    auto vars = edge_vars(Side::g, n);
    auto fv = edge_vars(Side::h, nprime);
    vars.insert(vars.end(), fv.begin(), fv.end());
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       tag2("E", n, nprime));
}

Ideal ideal_X(int k, int n, int nprime) {
    check_kn(k, n, nprime);
    need_k3(k);
    auto gens = gens_color_roots(Side::g, k, n);
    auto more = gens_color_roots(Side::h, k, nprime);
    gens.insert(gens.end(), more.begin(), more.end());
    std::vector<Variable> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(Variable::x(i));
    for (int i = 1; i <= nprime; ++i) vars.push_back(Variable::y(i));
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       tag3("X", k, n, nprime));
}

Ideal ideal_Z(int k, int n, int nprime) {
    check_kn(k, n, nprime);
    need_k3(k);
    std::vector<Polynomial> gens;
    std::vector<Variable> vars;
    for (int i = 1; i <= n; ++i)
        for (int ip = 1; ip <= nprime; ++ip) {
            vars.push_back(Variable::z(i, ip));
            gens.push_back(pvar(Variable::z(i, ip)).pow(k - 1) - one());
        }
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       tag3("Z", k, n, nprime));
}

Ideal ideal_I(int k, int n) {
    check_kn(k, n);
    need_k3(k);
    return side_ideal(Side::g, n, gens_proper(Side::g, k, n), tag2("I", k, n),
                      false, true, n);
}

Ideal ideal_Iprime(int k, int nprime) {
    check_kn(k, nprime);
    need_k3(k);
    return side_ideal(Side::h, nprime, gens_proper(Side::h, k, nprime),
                      tag2("I'", k, nprime), false, true, nprime);
}

Ideal ideal_J(int k, int n, int nprime) {
    check_kn(k, n, nprime);
    need_k3(k);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int ip = 1; ip <= nprime; ++ip)
                for (int jp = ip + 1; jp <= nprime; ++jp)
                    gens.push_back(pvar(Variable::e(i, j)) * pvar(Variable::f(ip, jp)) *
                                   geometric_sum(Variable::z(i, ip),
                                                 Variable::z(j, jp), k - 2));
    return Ideal::make(VarUniverse::pair_ring(n, nprime), std::move(gens),
                       tag3("J", k, n, nprime));
}

Ideal assemble_Jcal(int k, int n, int nprime) {
    check_kn(k, n, nprime);
    std::vector<Polynomial> gens;
    auto push = [&](std::vector<Polynomial> part) {
        for (auto& g : part) gens.push_back(std::move(g));
    };
    push(ideal_E(n, nprime).generators);
    push(ideal_X(k, n, nprime).generators);
    push(ideal_Z(k, n, nprime).generators);
    push(ideal_product(ideal_I(k, n), ideal_Iprime(k, nprime)).generators);
    push(ideal_J(k, n, nprime).generators);
    return Ideal::make(VarUniverse::w_ring(k, n, nprime), std::move(gens),
                       tag3("Jcal", k, n, nprime));
}

Ideal ideal_P(int k, int n) {
    check_kn(k, n);
    need_k3(k);
    return side_ideal(Side::g, n, gens_P(Side::g, k, n), tag2("P", k, n), true);
}

Ideal ideal_Pprime(int k, int nprime) {
    check_kn(k, nprime);
    need_k3(k);
    return side_ideal(Side::h, nprime, gens_P(Side::h, k, nprime),
                      tag2("P'", k, nprime), true);
}

Ideal ideal_Q(int k, int n) {
    check_kn(k, n);
    need_k3(k);
    return side_ideal(Side::g, n, gens_Q(Side::g, k, n), tag2("Q", k, n));
}

Ideal ideal_Qprime(int k, int nprime) {
    check_kn(k, nprime);
    need_k3(k);
    return side_ideal(Side::h, nprime, gens_Q(Side::h, k, nprime),
                      tag2("Q'", k, nprime));
}

Ideal ideal_R(int k, int n) {
    check_kn(k, n);
    return side_ideal(Side::g, n, gens_R(Side::g, k, n), tag2("R", k, n));
}

Ideal ideal_Rprime(int k, int nprime) {
    check_kn(k, nprime);
    return side_ideal(Side::h, nprime, gens_R(Side::h, k, nprime),
                      tag2("R'", k, nprime));
}

Ideal ideal_S(int k, int n) {
    check_kn(k, n);
    return side_ideal(Side::g, n, gens_S(Side::g, k, n), tag2("S", k, n));
}

Ideal ideal_Sprime(int k, int nprime) {
    check_kn(k, nprime);
    return side_ideal(Side::h, nprime, gens_S(Side::h, k, nprime),
                      tag2("S'", k, nprime));
}

Ideal assemble_Ical(int k, int n, int nprime) {
    check_kn(k, n, nprime);
    if (k < 3) throw ParameterError("the V-side assembly needs k >= 3");
    std::vector<Polynomial> gens;
    auto push = [&](std::vector<Polynomial> part) {
        for (auto& g : part) gens.push_back(std::move(g));
    };
    push(ideal_E(n, nprime).generators);
    push(ideal_Z(k, n, nprime).generators);
    push(ideal_J(k, n, nprime).generators);
    push(ideal_P(k, n).generators);
    push(ideal_Pprime(k, nprime).generators);
    push(ideal_Q(k, n).generators);
    push(ideal_Qprime(k, nprime).generators);
    push(ideal_R(k, n).generators);
    push(ideal_Rprime(k, nprime).generators);
    push(ideal_product(ideal_R(k - 1, n), ideal_Rprime(k - 1, nprime)).generators);
    push(ideal_S(k, n).generators);
    push(ideal_Sprime(k, nprime).generators);
    return Ideal::make(VarUniverse::v_ring(k, n, nprime), std::move(gens),
                       tag3("Ical", k, n, nprime));
}

Ideal fixed_graph_ideal(const Graph& g, Side side) {
    int n = g.order();
    if (n < 1) throw ParameterError("fixed graph ideal needs at least one vertex");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Polynomial e = pvar(edge_var(side, i, j));
            gens.push_back(g.adjacent(i, j) ? e - one() : e);
        }
    return side_ideal(side, n, std::move(gens),
                      tag2(side == Side::g ? "fixedG" : "fixedH", n, g.size()));
}

Ideal assemble_L(const Graph& g, const Graph& h, int k) {
    check_kn(k, g.order(), h.order());
    if (k < 3) throw ParameterError("the fixed-pair assembly needs k >= 3");
    int n = g.order(), nprime = h.order();
    std::vector<Polynomial> gens;
    auto push = [&](std::vector<Polynomial> part) {
        for (auto& p : part) gens.push_back(std::move(p));
    };
    push(fixed_graph_ideal(g, Side::g).generators);
    push(fixed_graph_ideal(h, Side::h).generators);
    push(ideal_Z(k, n, nprime).generators);
    push(ideal_J(k, n, nprime).generators);
    return Ideal::make(VarUniverse::pair_ring(n, nprime), std::move(gens),
                       tag3("L", k, n, nprime));
}

Ideal triangle_free_ideal(int n, Side side) {
    if (n < 1) throw ParameterError("vertex counts must be positive");
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = j + 1; l <= n; ++l)
                gens.push_back(pvar(edge_var(side, i, j)) * pvar(edge_var(side, j, l)) *
                               pvar(edge_var(side, i, l)));
    return side_ideal(side, n, std::move(gens), tag2("trifree", n, 0));
}

std::vector<Variable> ef_variables(int n, int nprime) {
    auto vars = edge_vars(Side::g, n);
    auto fv = edge_vars(Side::h, nprime);
    vars.insert(vars.end(), fv.begin(), fv.end());
    return vars;
}

ElimResult tilde_J(int k, int n, int nprime, const GbLimits& limits) {
    ElimResult r = elimination_ideal(assemble_Jcal(k, n, nprime),
                                     ef_variables(n, nprime), limits);
    if (r.outcome == GbOutcome::done) r.ideal.provenance = tag3("tildeJ", k, n, nprime);
    return r;
}

ElimResult tilde_I(int k, int n, int nprime, const GbLimits& limits) {
    ElimResult r = elimination_ideal(assemble_Ical(k, n, nprime),
                                     ef_variables(n, nprime), limits);
    if (r.outcome == GbOutcome::done) r.ideal.provenance = tag3("tildeI", k, n, nprime);
    return r;
}

} // namespace hedet
