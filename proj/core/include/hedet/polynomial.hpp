#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "hedet/monomial.hpp"
#include "hedet/order.hpp"
#include "hedet/rational.hpp"

namespace hedet {

struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term& o) const {
        return mono == o.mono && coeff == o.coeff;
    }
};

// Multivariate polynomial with exact rational coefficients. Terms are held
// combined and sorted in descending grevlex, which makes representation (and
// operator==) canonical independent of any order a caller later picks.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial var(Variable v, int exp = 1);
    static Polynomial term(Rational c, Monomial m);
    static Polynomial from_terms(std::vector<Term> terms); // combines + sorts

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    int degree() const; // -1 for the zero polynomial
    std::span<const Term> terms() const { return terms_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    // Leading term under an arbitrary order; pre: not zero.
    const Term& leading_term(const MonomialOrder& order) const;

    // Replace every occurrence of `from` with `to` (exponents merge).
    Polynomial substituted(Variable from, Variable to) const;

    std::vector<Variable> support() const;
    bool supported_on(const std::vector<Variable>& sorted_vars) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p.scaled(c);
}

} // namespace hedet
