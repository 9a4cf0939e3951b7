#pragma once

#include "hedet/graph.hpp"
#include "hedet/groebner.hpp"
#include "hedet/ideal.hpp"

namespace hedet {

// Which half of a graph pair an edge-variable family describes: the g side
// uses e/x variables, the h side f/y.
enum class Side { g, h };

// a^top + a^(top-1) b + ... + b^top; top >= 0.
Polynomial geometric_sum(Variable a, Variable b, int top);

// Edge indicators are 0/1: e_ij(e_ij - 1) and f_i'j'(f_i'j' - 1).
Ideal ideal_E(int n, int nprime);

// Vertex colors are (k-1)-th roots of unity: x_i^{k-1} - 1, y_i'^{k-1} - 1.
Ideal ideal_X(int k, int n, int nprime);

// Product-vertex colors: z_ii'^{k-1} - 1 for all (i, i').
Ideal ideal_Z(int k, int n, int nprime);

// Adjacent vertices get different colors: e_ij * geom(x_i, x_j, k-2).
Ideal ideal_I(int k, int n);
Ideal ideal_Iprime(int k, int nprime);

// Product edges get different endpoint colors:
// e_ij f_i'j' * geom(z_ii', z_jj', k-2) over i<j, i'<j'.
Ideal ideal_J(int k, int n, int nprime);

// E + X + Z + I*I' + J over the full e/f/x/y/z ring.
Ideal assemble_Jcal(int k, int n, int nprime);

// Per vertex: minimum degree >= 1; per potential edge pq: a proper
// (k-1)-coloring of the graph minus pq with both ends colored 1, via the
// auxiliary variables x_pql.
Ideal ideal_P(int k, int n);
Ideal ideal_Pprime(int k, int nprime);

// Vertex 1 lies in no (k-1)-clique.
Ideal ideal_Q(int k, int n);
Ideal ideal_Qprime(int k, int nprime);

// No k-clique anywhere: one generator per k-subset.
Ideal ideal_R(int k, int n);
Ideal ideal_Rprime(int k, int nprime);

// Minimum degree >= k-1: per vertex, every (n-k+1)-subset of non-neighbors
// is impossible. An empty subset makes the generator 1 (condition
// unsatisfiable); a negative subset size makes the family empty.
Ideal ideal_S(int k, int n);
Ideal ideal_Sprime(int k, int nprime);

// E + Z + J + P + P' + Q + Q' + R_k + R'_k + R_{k-1}*R'_{k-1} + S + S'
// over the e/f/xt/yt/z ring.
Ideal assemble_Ical(int k, int n, int nprime);

// One generator per vertex pair: e_ij - 1 for edges, e_ij for non-edges,
// row-major.
Ideal fixed_graph_ideal(const Graph& g, Side side);

// fixed(G) + fixed(H) + Z + J over the e/f/z ring; contains 1 exactly when
// the product graph is not (k-1)-colorable.
Ideal assemble_L(const Graph& g, const Graph& h, int k);

// e_ij e_jl e_il over all triples i<j<l.
Ideal triangle_free_ideal(int n, Side side);

// The e/f block, the subring both tilde ideals live in.
std::vector<Variable> ef_variables(int n, int nprime);

// Elimination of everything except e/f from Jcal resp. Ical.
ElimResult tilde_J(int k, int n, int nprime, const GbLimits& limits = {});
ElimResult tilde_I(int k, int n, int nprime, const GbLimits& limits = {});

} // namespace hedet
