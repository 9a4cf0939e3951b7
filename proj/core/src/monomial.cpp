#include "hedet/monomial.hpp"

#include <algorithm>

#include "hedet/errors.hpp"

namespace hedet {

std::size_t& monomial_exponent_cap() {
    static std::size_t cap = 65536;
    return cap;
}

namespace {
void check_exponent(long long e) {
    if (e > static_cast<long long>(monomial_exponent_cap()))
        throw ParameterError("monomial exponent exceeds configured cap");
}
} // namespace

Monomial Monomial::of(Variable v, int exp) {
    if (exp < 0) throw ParameterError("monomial exponent must be nonnegative");
    check_exponent(exp);
    Monomial m;
    if (exp > 0) {
        m.entries_.push_back({v, exp});
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from_pairs(std::span<const Entry> entries) {
    boost::container::small_vector<Entry, 4> tmp(entries.begin(), entries.end());
    std::sort(tmp.begin(), tmp.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (const Entry& e : tmp) {
        if (e.second < 0) throw ParameterError("monomial exponent must be nonnegative");
        if (e.second == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == e.first) {
            long long sum = static_cast<long long>(m.entries_.back().second) + e.second;
            check_exponent(sum);
            m.entries_.back().second = static_cast<int>(sum);
        } else {
            m.entries_.push_back(e);
        }
        m.degree_ += e.second;
    }
    return m;
}

int Monomial::exponent(Variable v) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), v,
        [](const Entry& e, Variable x) { return e.first < x; });
    if (it == entries_.end() || it->first != v) return 0;
    return it->second;
}

std::vector<Variable> Monomial::support() const {
    std::vector<Variable> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.first);
    return out;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m;
    m.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            m.entries_.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            m.entries_.push_back(*b++);
        } else {
            long long sum = static_cast<long long>(a->second) + b->second;
            check_exponent(sum);
            m.entries_.push_back({a->first, static_cast<int>(sum)});
            ++a;
            ++b;
        }
    }
    m.degree_ = degree_ + o.degree_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    auto b = o.entries_.begin(), be = o.entries_.end();
    for (const Entry& e : entries_) {
        while (b != be && b->first < e.first) ++b;
        if (b == be || b->first != e.first || b->second < e.second) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial m;
    auto b = o.entries_.begin(), be = o.entries_.end();
    for (const Entry& e : entries_) {
        if (b != be && b->first == e.first) {
            int rem = e.second - b->second;
            if (rem < 0) throw ParameterError("monomial division is not exact");
            if (rem > 0) m.entries_.push_back({e.first, rem});
            ++b;
        } else {
            m.entries_.push_back(e);
        }
    }
    if (b != be) throw ParameterError("monomial division is not exact");
    m.degree_ = degree_ - o.degree_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto i = a.entries_.begin(), ie = a.entries_.end();
    auto j = b.entries_.begin(), je = b.entries_.end();
    while (i != ie || j != je) {
        if (j == je || (i != ie && i->first < j->first)) {
            m.entries_.push_back(*i);
            m.degree_ += i->second;
            ++i;
        } else if (i == ie || j->first < i->first) {
            m.entries_.push_back(*j);
            m.degree_ += j->second;
            ++j;
        } else {
            int e = std::max(i->second, j->second);
            m.entries_.push_back({i->first, e});
            m.degree_ += e;
            ++i;
            ++j;
        }
    }
    return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    auto i = a.entries_.begin(), ie = a.entries_.end();
    auto j = b.entries_.begin(), je = b.entries_.end();
    while (i != ie && j != je) {
        if (i->first < j->first) ++i;
        else if (j->first < i->first) ++j;
        else return false;
    }
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const Entry& e : entries_) {
        h = (h ^ e.first.key()) * 1099511628211ull;
        h = (h ^ static_cast<std::size_t>(e.second)) * 1099511628211ull;
    }
    return h;
}

} // namespace hedet
