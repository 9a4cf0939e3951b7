#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hedet/order.hpp"
#include "hedet/polynomial.hpp"
#include "hedet/variable.hpp"

namespace hedet {

// A finitely generated ideal: nonzero generators over a declared universe.
// `provenance` is a short human-readable label ("E(2,2)", "L(C5,C5,k=3)").
struct Ideal {
    VarUniverse universe;
    std::vector<Polynomial> generators;
    std::string provenance;

    static Ideal make(VarUniverse universe, std::vector<Polynomial> generators,
                      std::string provenance); // validates
    std::size_t size() const { return generators.size(); }
};

// Generator-wise product ideal: every a*b, row-major in (a, b).
Ideal ideal_product(const Ideal& a, const Ideal& b);
// Concatenation of generator lists (ideal sum), in argument order.
Ideal ideal_sum(std::vector<Ideal> parts, std::string provenance);

struct GbStats {
    std::uint64_t s_pairs = 0;
    std::uint64_t zero_reductions = 0;
    int max_degree = 0;
    std::uint64_t elapsed_ms = 0;
};

struct GroebnerBasis {
    VarUniverse universe;
    MonomialOrder order;
    std::vector<Polynomial> basis; // reduced, monic, sorted by ascending LT
    GbStats stats;
};

} // namespace hedet
