#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hedet/ideal.hpp"

namespace hedet {

// Resource caps for basis computations. Exceeding one yields an explicit
// aborted outcome; it is never silently treated as an answer.
struct GbLimits {
    double timeout_seconds = 3600.0;
    std::size_t max_terms = 1'000'000; // per working polynomial and basis total
};

enum class GbOutcome { done, timeout, term_cap };

struct GbResult {
    GbOutcome outcome = GbOutcome::done;
    GroebnerBasis gb; // meaningful only when done
    std::string note; // what tripped, when aborted
    bool done() const { return outcome == GbOutcome::done; }
};

enum class PairStrategy { normal, sugar };

// Remainder of f on division by the nonzero polynomials in `basis`, with full
// tail reduction. Divisors are tried in list order at every step, so the
// result is deterministic in (f, basis, order).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

// S-polynomial of two nonzero polynomials under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

// Buchberger's algorithm with the Gebauer-Moeller pair update (coprime and
// chain criteria), returning the unique reduced, monic basis sorted by
// ascending leading term. Discovery of a unit short-circuits to basis {1}.
GbResult buchberger(const Ideal& ideal, const MonomialOrder& order,
                    const GbLimits& limits = {},
                    PairStrategy strategy = PairStrategy::normal);

// Membership of f in the ideal with the given (already reduced) basis.
bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);

struct UnitResult {
    GbOutcome outcome;
    bool contains_one = false; // meaningful only when done
    GbStats stats;
};
// Does the ideal contain 1 (equivalently: is its variety empty)?
UnitResult contains_one(const Ideal& ideal, const GbLimits& limits = {});

struct ElimResult {
    GbOutcome outcome;
    Ideal ideal;   // generators of I ∩ k[keep], a reduced basis over keep
    GbStats stats;
};
// Intersection with the subring on `keep`, via a block elimination order.
ElimResult elimination_ideal(const Ideal& ideal,
                             const std::vector<Variable>& keep,
                             const GbLimits& limits = {});

struct SubsetResult {
    GbOutcome outcome;
    bool contained = false;            // meaningful only when done
    std::optional<std::size_t> witness; // first generator of A outside B
    GbStats stats;
};
// Is ideal A contained in ideal B? A's variables must lie in B's universe.
SubsetResult ideal_subset(const Ideal& a, const Ideal& b,
                          const GbLimits& limits = {});

} // namespace hedet
