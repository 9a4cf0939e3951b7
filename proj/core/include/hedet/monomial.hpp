#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hedet/variable.hpp"

namespace hedet {

// Product exponents are capped to keep runaway constructions loud instead of
// silent; times()/pow() throw ParameterError past the cap.
std::size_t& monomial_exponent_cap(); // default 65536, settable

// A power product. Entries are (variable, exponent>0) pairs kept sorted by
// the natural variable order; the empty product is 1.
class Monomial {
public:
    using Entry = std::pair<Variable, int>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial of(Variable v, int exp = 1);
    // Accepts duplicates (exponents are summed) in any order.
    static Monomial from_pairs(std::span<const Entry> entries);

    bool is_one() const { return entries_.empty(); }
    int degree() const { return degree_; }
    int exponent(Variable v) const;
    std::span<const Entry> entries() const { return {entries_.data(), entries_.size()}; }
    std::vector<Variable> support() const;

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const; // *this / o, pre: o.divides(*this)

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    std::size_t hash() const;

private:
    boost::container::small_vector<Entry, 4> entries_;
    int degree_ = 0;
};

} // namespace hedet
