#pragma once

#include <gmpxx.h>

#include <string>

namespace hedet {

// Exact rational coefficients. mpq_class does not canonicalize two-argument
// constructions, so build values through rat() or from integers.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace hedet
