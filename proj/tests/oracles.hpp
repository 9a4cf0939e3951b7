#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
// membership by solving for bounded-degree cofactors with exact Gaussian
// elimination, plus small helpers shared across test files.

#include <optional>
#include <unordered_map>
#include <vector>

#include "hedet/ideal.hpp"
#include "hedet/polynomial.hpp"
#include "hedet/rational.hpp"

namespace hedet::test {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline void collect_monomials(const std::vector<Variable>& vars, int max_degree,
                              std::size_t next, Monomial current,
                              std::vector<Monomial>& out) {
    if (next == vars.size()) {
        out.push_back(current);
        return;
    }
    for (int e = 0; e + current.degree() <= max_degree; ++e) {
        Monomial m = current.times(Monomial::of(vars[next], e));
        collect_monomials(vars, max_degree, next + 1, m, out);
    }
}

// Search for cofactors h_i with deg h_i <= max_cofactor_degree such that
// sum h_i g_i = p. A found certificate is re-verified by direct expansion,
// so a `true` answer is unconditionally trustworthy; `false` only means no
// certificate exists at this degree bound.
inline bool bounded_membership(const Polynomial& p,
                               const std::vector<Polynomial>& gens,
                               const std::vector<Variable>& vars,
                               int max_cofactor_degree) {
    std::vector<Monomial> cofactor_monos;
    collect_monomials(vars, max_cofactor_degree, 0, Monomial::one(),
                      cofactor_monos);

    // Column j = (generator gi, cofactor monomial m); rows = monomials of the
    // products and of p.
    struct Column {
        std::size_t gen;
        Monomial mono;
    };
    std::vector<Column> columns;
    std::vector<Polynomial> column_polys;
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (const Monomial& m : cofactor_monos) {
            columns.push_back({gi, m});
            column_polys.push_back(Polynomial::term(1, m) * gens[gi]);
        }

    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    auto row_index = [&](const Monomial& m) {
        auto [it, fresh] = row_of.try_emplace(m, row_of.size());
        (void)fresh;
        return it->second;
    };
    for (const Polynomial& cp : column_polys)
        for (const Term& t : cp.terms()) row_index(t.mono);
    for (const Term& t : p.terms()) row_index(t.mono);

    std::size_t rows = row_of.size(), cols = columns.size();
    std::vector<std::vector<Rational>> a(rows,
                                         std::vector<Rational>(cols + 1, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const Term& t : column_polys[j].terms())
            a[row_of.at(t.mono)][j] = t.coeff;
    for (const Term& t : p.terms()) a[row_of.at(t.mono)][cols] = t.coeff;

    // Exact Gaussian elimination.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t cc = c; cc <= cols; ++cc) a[r][cc] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr][c] == 0) continue;
            Rational factor = a[rr][c];
            for (std::size_t cc = c; cc <= cols; ++cc)
                a[rr][cc] -= factor * a[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t rr = r; rr < rows; ++rr)
        if (a[rr][cols] != 0) return false; // inconsistent: no certificate

    // Read one solution (free unknowns = 0) and verify it by expansion.
    std::vector<Rational> sol(cols, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        sol[pivot_col[i]] = a[i][cols];
    Polynomial expanded;
    for (std::size_t j = 0; j < cols; ++j)
        if (sol[j] != 0)
            expanded = expanded + sol[j] * column_polys[j];
    return expanded == p;
}

inline Ideal ideal_over_support(std::vector<Polynomial> gens,
                                std::string name = "test") {
    std::vector<Variable> vars;
    for (const Polynomial& g : gens)
        for (Variable v : g.support()) vars.push_back(v);
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       std::move(name));
}

// The ten fixed ideals used by the uniqueness-under-shuffling suites.
std::vector<std::vector<Polynomial>> fixed_ideals();

} // namespace hedet::test
