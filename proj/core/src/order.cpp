#include "hedet/order.hpp"

#include <algorithm>

namespace hedet {

namespace {

// Earlier enumeration (smaller Variable) means greater in the order, so lex
// scans both entry lists from the front (greatest variables first).
Ordering lex_compare(std::span<const Monomial::Entry> a,
                     std::span<const Monomial::Entry> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end()) return Ordering::GT;
        if (i == a.end()) return Ordering::LT;
        if (i->first < j->first) return Ordering::GT;
        if (j->first < i->first) return Ordering::LT;
        if (i->second != j->second)
            return i->second > j->second ? Ordering::GT : Ordering::LT;
        ++i;
        ++j;
    }
    return Ordering::EQ;
}

// Grevlex over the entries selected by `in_block`, without materializing the
// projection. Degree first; ties scan from the least variable (back of the
// lists), and the first difference goes to the monomial with the smaller
// exponent there.
template <class Pred>
Ordering grevlex_compare_filtered(std::span<const Monomial::Entry> a,
                                  std::span<const Monomial::Entry> b,
                                  Pred in_block) {
    int deg_a = 0, deg_b = 0;
    for (const auto& e : a)
        if (in_block(e.first)) deg_a += e.second;
    for (const auto& e : b)
        if (in_block(e.first)) deg_b += e.second;
    if (deg_a != deg_b) return deg_a > deg_b ? Ordering::GT : Ordering::LT;

    auto i = a.rbegin();
    auto j = b.rbegin();
    auto skip = [&](auto& it, auto end) {
        while (it != end && !in_block(it->first)) ++it;
    };
    skip(i, a.rend());
    skip(j, b.rend());
    while (i != a.rend() || j != b.rend()) {
        if (j == b.rend()) return Ordering::LT; // a has the lesser trailing variable
        if (i == a.rend()) return Ordering::GT;
        if (j->first < i->first) return Ordering::LT;
        if (i->first < j->first) return Ordering::GT;
        if (i->second != j->second)
            return i->second < j->second ? Ordering::GT : Ordering::LT;
        ++i;
        ++j;
        skip(i, a.rend());
        skip(j, b.rend());
    }
    return Ordering::EQ;
}

Ordering grevlex_compare(std::span<const Monomial::Entry> a, int deg_a,
                         std::span<const Monomial::Entry> b, int deg_b) {
    if (deg_a != deg_b) return deg_a > deg_b ? Ordering::GT : Ordering::LT;
    return grevlex_compare_filtered(a, b, [](Variable) { return true; });
}

} // namespace

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    return o;
}

MonomialOrder MonomialOrder::grevlex() {
    MonomialOrder o;
    o.kind_ = Kind::grevlex;
    return o;
}

MonomialOrder MonomialOrder::block_elim(std::vector<Variable> eliminated) {
    std::sort(eliminated.begin(), eliminated.end());
    eliminated.erase(std::unique(eliminated.begin(), eliminated.end()),
                     eliminated.end());
    MonomialOrder o;
    o.kind_ = Kind::block_elim;
    o.eliminated_ = std::move(eliminated);
    return o;
}

MonomialOrder MonomialOrder::elim_keeping(const VarUniverse& universe,
                                          const std::vector<Variable>& keep) {
    std::vector<Variable> kept_sorted = keep;
    std::sort(kept_sorted.begin(), kept_sorted.end());
    std::vector<Variable> eliminated;
    for (Variable v : universe.vars())
        if (!std::binary_search(kept_sorted.begin(), kept_sorted.end(), v))
            eliminated.push_back(v);
    return block_elim(std::move(eliminated));
}

bool MonomialOrder::is_eliminated(Variable v) const {
    return std::binary_search(eliminated_.begin(), eliminated_.end(), v);
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::lex:
        return lex_compare(a.entries(), b.entries());
    case Kind::grevlex:
        return grevlex_compare(a.entries(), a.degree(), b.entries(), b.degree());
    case Kind::block_elim: {
        auto elim = [this](Variable v) { return is_eliminated(v); };
        Ordering first = grevlex_compare_filtered(a.entries(), b.entries(), elim);
        if (first != Ordering::EQ) return first;
        auto kept = [this](Variable v) { return !is_eliminated(v); };
        return grevlex_compare_filtered(a.entries(), b.entries(), kept);
    }
    }
    return Ordering::EQ;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::block_elim:
        return "block-elim(" + std::to_string(eliminated_.size()) +
               " eliminated)";
    }
    return "?";
}

} // namespace hedet
