#include "hedet/verify.hpp"

#include <algorithm>

#include "hedet/canonical.hpp"
#include "hedet/encode.hpp"
#include "hedet/errors.hpp"
#include "hedet/named_graphs.hpp"

namespace hedet {

namespace {

void fold(GbStats& into, const GbStats& s) {
    into.s_pairs += s.s_pairs;
    into.zero_reductions += s.zero_reductions;
    into.max_degree = std::max(into.max_degree, s.max_degree);
    into.elapsed_ms += s.elapsed_ms;
}

const char* cap_note(GbOutcome o) {
    return o == GbOutcome::timeout ? "timeout" : "term cap";
}

std::vector<CanonKey> keys_of(const std::vector<Graph>& graphs) {
    std::vector<CanonKey> keys;
    keys.reserve(graphs.size());
    for (const Graph& g : graphs) keys.push_back(canonical_form(g));
    std::sort(keys.begin(), keys.end());
    return keys;
}

// the published catalogs for k <= 4, order <= 8
std::vector<Graph> expected_critical(int k, int n) {
    if (k == 3) {
        if (n >= 3 && n % 2 == 1) return {Graph::cycle(n)};
        return {};
    }
    if (n == 4) return {Graph::complete(4)};
    if (n == 6) return {join(Graph::complete(1), Graph::cycle(5))};
    if (n == 7) return a4_family();
    return {};
}

bool spot_check_k5(std::string& detail) {
    struct Spot { const char* name; Graph g; };
    std::vector<Spot> spots;
    spots.push_back({"K5", Graph::complete(5)});
    spots.push_back({"K2+C5", join(Graph::complete(2), Graph::cycle(5))});
    for (std::size_t i = 0; i < a4_family().size(); ++i)
        spots.push_back({"K1+A4 member", join(Graph::complete(1), a4_family()[i])});
    spots.push_back({"Hstar", h_star()});
    for (const auto& s : spots)
        if (!is_k_critical(s.g, 5)) {
            detail = std::string(s.name) + " failed the 5-criticality check";
            return false;
        }
    return true;
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        default: return "aborted";
    }
}

CheckResult check_theorem44(int k, int n, int nprime, const GbLimits& limits) {
    CheckResult r;
    ElimResult tj = tilde_J(k, n, nprime, limits);
    fold(r.stats, tj.stats);
    if (tj.outcome != GbOutcome::done) {
        r.note = cap_note(tj.outcome);
        return r;
    }
    ElimResult ti = tilde_I(k, n, nprime, limits);
    fold(r.stats, ti.stats);
    if (ti.outcome != GbOutcome::done) {
        r.note = cap_note(ti.outcome);
        return r;
    }
    SubsetResult sub = ideal_subset(tj.ideal, ti.ideal, limits);
    fold(r.stats, sub.stats);
    if (sub.outcome != GbOutcome::done) {
        r.note = cap_note(sub.outcome);
        return r;
    }
    r.verdict = sub.contained ? Verdict::yes : Verdict::no;
    return r;
}

CheckResult check_fixed_pair(const Graph& g, const Graph& h, int k,
                             const GbLimits& limits, const ColoringOptions& oracle) {
    CheckResult r;
    UnitResult unit = contains_one(assemble_L(g, h, k), limits);
    fold(r.stats, unit.stats);
    if (unit.outcome != GbOutcome::done) {
        r.note = cap_note(unit.outcome);
        return r;
    }
    Tristate colorable = k_colorable(tensor_product(g, h), k - 1, oracle);
    if (colorable != Tristate::unknown &&
        unit.contains_one == (colorable == Tristate::yes))
        throw OracleMismatchError(
            "ideal membership and the coloring oracle disagree on a fixed pair "
            "(k = " + std::to_string(k) + ")");
    r.verdict = unit.contains_one ? Verdict::yes : Verdict::no;
    r.note = colorable == Tristate::unknown ? "oracle inconclusive" : "oracle agrees";
    return r;
}

A4Report verify_A4() {
    A4Report r;
    r.min_degree_ok = true;
    for (const Graph& g : enumerate_graphs(7))
        if (is_k_critical(g, 4)) r.classes.push_back(g);
    for (const Graph& g : r.classes) {
        if (has_vertex_in_no_clique(g, 3)) {
            ++r.no_triangle_count;
            r.no_triangle_is_h0 = are_isomorphic(g, h0());
        }
        if (g.min_degree() < 3) r.min_degree_ok = false;
    }
    return r;
}

CriticalCatalog verify_small_critical(int k, int max_n) {
    if (k < 3 || k > 5) throw ParameterError("critical catalogs cover k = 3, 4, 5");
    CriticalCatalog r;
    r.k = k;
    r.max_n = max_n;
    if (k == 5) {
        r.matches = spot_check_k5(r.detail);
        return r;
    }
    if (max_n < 1 || max_n > 8)
        throw ParameterError("criticality enumeration reaches 8 vertices");
    r.found.resize(max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : enumerate_graphs(n))
            if (is_k_critical(g, k)) r.found[n - 1].push_back(g);
        if (r.matches && keys_of(r.found[n - 1]) != keys_of(expected_critical(k, n))) {
            r.matches = false;
            r.detail = "catalog mismatch at order " + std::to_string(n);
        }
    }
    return r;
}

bool verify_prop43(int k) {
    if (k < 2) throw ParameterError("the telescoping identity needs k >= 2");
    Variable a = Variable::x(1), b = Variable::x(2);
    Polynomial geom = geometric_sum(a, b, k - 1);
    Polynomial telescoped =
        (Polynomial::var(a) - Polynomial::var(b)) * geom;
    if (telescoped != Polynomial::var(a).pow(k) - Polynomial::var(b).pow(k))
        return false;
    Polynomial diagonal = geom.substituted(b, a);
    return !diagonal.is_zero() &&
           diagonal == rat(k) * Polynomial::var(a).pow(k - 1);
}

} // namespace hedet
