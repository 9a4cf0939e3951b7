#include "hedet/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

bool canonical_greater(const Monomial& a, const Monomial& b) {
    return canonical_order().greater(a, b);
}

} // namespace

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::var(Variable v, int exp) {
    return term(1, Monomial::of(v, exp));
}

Polynomial Polynomial::term(Rational c, Monomial m) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return canonical_greater(a.mono, b.mono);
    });
    Polynomial p;
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && canonical_greater(a->mono, b->mono))) {
            out.terms_.push_back(*a++);
        } else if (a == ae || canonical_greater(b->mono, a->mono)) {
            out.terms_.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
            ++a;
            ++b;
        }
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero();
    Polynomial out = *this;
    for (Term& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Term> products;
    products.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            products.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    return from_terms(std::move(products));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw ParameterError("zero polynomial has no leading term");
    if (order.kind() == MonomialOrder::Kind::grevlex) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::substituted(Variable from, Variable to) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<Monomial::Entry> entries;
        for (const auto& e : t.mono.entries())
            entries.push_back({e.first == from ? to : e.first, e.second});
        terms.push_back({Monomial::from_pairs(entries), t.coeff});
    }
    return from_terms(std::move(terms));
}

std::vector<Variable> Polynomial::support() const {
    std::vector<Variable> vars;
    for (const Term& t : terms_)
        for (const auto& e : t.mono.entries()) vars.push_back(e.first);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Polynomial::supported_on(const std::vector<Variable>& sorted_vars) const {
    for (const Term& t : terms_)
        for (const auto& e : t.mono.entries())
            if (!std::binary_search(sorted_vars.begin(), sorted_vars.end(),
                                    e.first))
                return false;
    return true;
}

} // namespace hedet
