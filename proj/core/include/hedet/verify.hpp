#pragma once

#include <string>
#include <vector>

#include "hedet/coloring.hpp"
#include "hedet/graph.hpp"
#include "hedet/groebner.hpp"

namespace hedet {

enum class Verdict { yes, no, aborted };
const char* to_string(Verdict v);

struct CheckResult {
    Verdict verdict = Verdict::aborted;
    GbStats stats;    // accumulated over every basis computed for the check
    std::string note; // which cap tripped, when aborted
};

// The inclusion that settles the conjecture for all pairs drawn from graphs
// on n and n' vertices at chromatic level k: eliminate both assemblies down
// to the edge subring and test containment.
CheckResult check_theorem44(int k, int n, int nprime, const GbLimits& limits = {});

// Unit test for one fixed pair: yes means the product has no proper
// (k-1)-coloring. The verdict is cross-checked against the coloring oracle;
// disagreement throws OracleMismatchError.
CheckResult check_fixed_pair(const Graph& g, const Graph& h, int k,
                             const GbLimits& limits = {},
                             const ColoringOptions& oracle = {});

struct A4Report {
    std::vector<Graph> classes; // 4-critical classes on 7 vertices
    int no_triangle_count = 0;  // classes with a vertex outside every triangle
    bool no_triangle_is_h0 = false;
    bool min_degree_ok = false; // every class has delta >= 3
    bool ok() const {
        return classes.size() == 7 && no_triangle_count == 1 &&
               no_triangle_is_h0 && min_degree_ok;
    }
};
A4Report verify_A4();

struct CriticalCatalog {
    int k = 0;
    int max_n = 0;
    // found[n-1] holds the k-critical classes on exactly n vertices; empty in
    // spot-check mode (k = 5), where only `matches` and `detail` are filled.
    std::vector<std::vector<Graph>> found;
    bool matches = true;
    std::string detail; // first discrepancy, when any
};
// Enumerates k-critical classes up to max_n vertices (k <= 4) and compares
// them with the known catalogs; k = 5 instead spot-checks joined
// constructions, which is as far as enumeration reaches on a desktop.
CriticalCatalog verify_small_critical(int k, int max_n);

// Telescoping identity (x1 - x2) * (x1^{k-1} + ... + x2^{k-1}) = x1^k - x2^k
// and the value k * x1^{k-1} at x2 = x1, both symbolically.
bool verify_prop43(int k);

} // namespace hedet
