#include "hedet/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "hedet/errors.hpp"

namespace hedet {

namespace {

using Clock = std::chrono::steady_clock;
// Working representation: terms ascending under the active order, lead at the
// back, so moving an irreducible lead out is O(1).
using Terms = std::vector<Term>;

struct AbortSignal {
    GbOutcome kind;
    const char* what;
};

Terms to_ascending(const Polynomial& p, const MonomialOrder& ord) {
    Terms t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return ord.less(a.mono, b.mono);
    });
    return t;
}

Polynomial to_polynomial(const Terms& t) {
    return Polynomial::from_terms(std::vector<Term>(t.begin(), t.end()));
}

void make_monic(Terms& t) {
    if (t.empty()) return;
    const Rational lc = t.back().coeff;
    if (lc == 1) return;
    for (Term& term : t) term.coeff /= lc;
}

// dst = f - c * m * g, merging two streams that are ascending under `ord`.
// max_terms == 0 disables the cap.
void merge_sub(Terms& dst, const Terms& f, const Terms& g, const Monomial& m,
               const Rational& c, const MonomialOrder& ord,
               std::size_t max_terms, int* max_degree) {
    dst.clear();
    dst.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    Rational gc;
    auto load_g = [&] {
        if (j < g.size()) {
            gm = g[j].mono.times(m);
            gc = g[j].coeff * c;
        }
    };
    load_g();
    while (i < f.size() || j < g.size()) {
        if (max_terms != 0 && dst.size() > max_terms)
            throw AbortSignal{GbOutcome::term_cap,
                              "working polynomial exceeded the term cap"};
        if (j == g.size()) {
            dst.push_back(f[i++]);
            continue;
        }
        if (i == f.size()) {
            if (max_degree) *max_degree = std::max(*max_degree, gm.degree());
            dst.push_back({std::move(gm), -gc});
            ++j;
            load_g();
            continue;
        }
        switch (ord.compare(f[i].mono, gm)) {
        case Ordering::LT:
            dst.push_back(f[i++]);
            break;
        case Ordering::GT:
            if (max_degree) *max_degree = std::max(*max_degree, gm.degree());
            dst.push_back({std::move(gm), -gc});
            ++j;
            load_g();
            break;
        case Ordering::EQ: {
            Rational nc = f[i].coeff - gc;
            if (nc != 0) dst.push_back({f[i].mono, std::move(nc)});
            ++i;
            ++j;
            load_g();
            break;
        }
        }
    }
}

bool is_unit_remainder(const Terms& t) {
    return t.size() == 1 && t[0].mono.is_one();
}

class Engine {
public:
    Engine(const MonomialOrder& ord, const GbLimits& limits, PairStrategy strat)
        : ord_(ord), limits_(limits), strat_(strat), start_(Clock::now()) {}

    GbResult run(const std::vector<Polynomial>& gens, const VarUniverse& universe) {
        GbResult res;
        try {
            for (const Polynomial& g : gens) {
                if (g.is_zero()) continue;
                if (insert(to_ascending(g, ord_))) return unit_result(universe);
            }
            while (!pairs_.empty()) {
                check_time();
                SPair p = pop_best_pair();
                ++stats_.s_pairs;
                int sugar = p.sugar;
                Terms s = spair_terms(p);
                Terms r = reduce_full(std::move(s), &sugar, SIZE_MAX);
                if (r.empty()) {
                    ++stats_.zero_reductions;
                    continue;
                }
                if (is_unit_remainder(r)) return unit_result(universe);
                make_monic(r);
                update(std::move(r), sugar);
            }
            res.gb = finish(universe);
        } catch (const AbortSignal& a) {
            res.outcome = a.kind;
            res.note = a.what;
            res.gb.universe = universe;
            res.gb.order = ord_;
            res.gb.stats = stats_;
            res.gb.stats.elapsed_ms = elapsed_ms();
        }
        return res;
    }

private:
    struct Elem {
        Terms poly; // monic
        Monomial lt;
        int sugar = 0;
        bool alive = true;
    };
    struct SPair {
        std::uint32_t i, j;
        Monomial lcm;
        int sugar = 0;
    };

    std::uint64_t elapsed_ms() const {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                  start_)
                .count());
    }

    void check_time() {
        if (std::chrono::duration<double>(Clock::now() - start_).count() >
            limits_.timeout_seconds)
            throw AbortSignal{GbOutcome::timeout, "time limit exceeded"};
    }

    void note_term(const Monomial& m) {
        stats_.max_degree = std::max(stats_.max_degree, m.degree());
    }

    // First alive element whose leading monomial divides m, trying smaller
    // leading degrees first (ties by insertion index).
    int find_reducer(const Monomial& m, std::size_t skip) const {
        for (std::uint32_t idx : reduce_order_) {
            const Elem& e = elems_[idx];
            if (!e.alive || idx == skip) continue;
            if (e.lt.degree() > m.degree()) break;
            if (e.lt.divides(m)) return static_cast<int>(idx);
        }
        return -1;
    }

    Terms reduce_full(Terms f, int* sugar_io, std::size_t skip) {
        Terms out_desc;
        Terms buf;
        std::uint64_t steps = 0;
        while (!f.empty()) {
            if ((++steps & 0x3ff) == 0) check_time();
            const Term& lead = f.back();
            int gi = find_reducer(lead.mono, skip);
            if (gi < 0) {
                out_desc.push_back(std::move(f.back()));
                f.pop_back();
                continue;
            }
            const Elem& g = elems_[gi];
            Monomial m = lead.mono.divided_by(g.lt);
            if (sugar_io)
                *sugar_io = std::max(*sugar_io, g.sugar + m.degree());
            merge_sub(buf, f, g.poly, m, lead.coeff, ord_, limits_.max_terms,
                      &stats_.max_degree);
            f.swap(buf);
            if (f.size() + out_desc.size() > limits_.max_terms)
                throw AbortSignal{GbOutcome::term_cap,
                                  "working polynomial exceeded the term cap"};
        }
        std::reverse(out_desc.begin(), out_desc.end());
        return out_desc;
    }

    Terms spair_terms(const SPair& p) {
        const Elem& a = elems_[p.i];
        const Elem& b = elems_[p.j];
        Monomial ma = p.lcm.divided_by(a.lt);
        Terms left;
        left.reserve(a.poly.size());
        for (const Term& t : a.poly) {
            left.push_back({t.mono.times(ma), t.coeff});
            note_term(left.back().mono);
        }
        Monomial mb = p.lcm.divided_by(b.lt);
        Terms out;
        merge_sub(out, left, b.poly, mb, Rational(1), ord_, limits_.max_terms,
                  &stats_.max_degree);
        return out;
    }

    // Insert a generator: full normal form first, then the pair update.
    // Returns true when a unit was discovered.
    bool insert(Terms g) {
        for (const Term& t : g) note_term(t.mono);
        Terms r = reduce_full(std::move(g), nullptr, SIZE_MAX);
        if (r.empty()) return false;
        if (is_unit_remainder(r)) return true;
        make_monic(r);
        int sugar = 0;
        for (const Term& t : r) sugar = std::max(sugar, t.mono.degree());
        update(std::move(r), sugar);
        return false;
    }

    // Gebauer-Moeller pair update: coprime criterion, lcm-domination filter on
    // the new pairs, chain criterion on the old pairs, and removal of basis
    // elements whose lead becomes divisible.
    void update(Terms h, int sugar) {
        const std::uint32_t h_idx = static_cast<std::uint32_t>(elems_.size());
        Monomial lt_h = h.back().mono;

        struct Cand {
            std::uint32_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(elems_.size());
        for (std::uint32_t g = 0; g < elems_.size(); ++g) {
            if (!elems_[g].alive) continue;
            cands.push_back({g, Monomial::lcm(lt_h, elems_[g].lt),
                             Monomial::coprime(lt_h, elems_[g].lt)});
        }

        std::vector<Cand> kept;
        for (std::size_t t = 0; t < cands.size(); ++t) {
            Cand& c = cands[t];
            if (c.coprime) {
                kept.push_back(std::move(c));
                continue;
            }
            bool dominated = false;
            for (std::size_t u = t + 1; u < cands.size() && !dominated; ++u)
                if (cands[u].lcm.divides(c.lcm)) dominated = true;
            for (const Cand& d : kept)
                if (dominated) break;
                else if (d.lcm.divides(c.lcm)) dominated = true;
            if (!dominated) kept.push_back(std::move(c));
        }

        // Chain criterion on pending pairs.
        std::size_t w = 0;
        for (std::size_t t = 0; t < pairs_.size(); ++t) {
            SPair& p = pairs_[t];
            bool drop = lt_h.divides(p.lcm) &&
                        Monomial::lcm(lt_h, elems_[p.i].lt) != p.lcm &&
                        Monomial::lcm(lt_h, elems_[p.j].lt) != p.lcm;
            if (!drop) {
                if (w != t) pairs_[w] = std::move(p);
                ++w;
            }
        }
        pairs_.resize(w);

        for (Cand& c : kept) {
            if (c.coprime) continue; // product criterion: s-pair reduces to zero
            const Elem& g = elems_[c.g];
            int pair_sugar =
                std::max(g.sugar + c.lcm.degree() - g.lt.degree(),
                         sugar + c.lcm.degree() - lt_h.degree());
            pairs_.push_back({c.g, h_idx, std::move(c.lcm), pair_sugar});
        }

        for (Elem& e : elems_)
            if (e.alive && lt_h.divides(e.lt)) {
                e.alive = false;
                basis_terms_ -= e.poly.size();
            }

        basis_terms_ += h.size();
        if (basis_terms_ > limits_.max_terms)
            throw AbortSignal{GbOutcome::term_cap, "basis exceeded the term cap"};

        elems_.push_back(Elem{std::move(h), std::move(lt_h), sugar, true});
        auto pos = std::upper_bound(
            reduce_order_.begin(), reduce_order_.end(), h_idx,
            [&](std::uint32_t a, std::uint32_t b) {
                int da = elems_[a].lt.degree(), db = elems_[b].lt.degree();
                return da != db ? da < db : a < b;
            });
        reduce_order_.insert(pos, h_idx);
    }

    SPair pop_best_pair() {
        std::size_t best = 0;
        for (std::size_t t = 1; t < pairs_.size(); ++t) {
            const SPair& a = pairs_[t];
            const SPair& b = pairs_[best];
            if (strat_ == PairStrategy::sugar && a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = t;
                continue;
            }
            switch (ord_.compare(a.lcm, b.lcm)) {
            case Ordering::LT:
                best = t;
                break;
            case Ordering::EQ:
                if (a.i < b.i || (a.i == b.i && a.j < b.j)) best = t;
                break;
            case Ordering::GT:
                break;
            }
        }
        SPair out = std::move(pairs_[best]);
        pairs_[best] = std::move(pairs_.back());
        pairs_.pop_back();
        return out;
    }

    GbResult unit_result(const VarUniverse& universe) {
        GbResult res;
        res.gb.universe = universe;
        res.gb.order = ord_;
        res.gb.basis = {Polynomial::constant(1)};
        res.gb.stats = stats_;
        res.gb.stats.elapsed_ms = elapsed_ms();
        return res;
    }

    GroebnerBasis finish(const VarUniverse& universe) {
        std::vector<std::uint32_t> alive;
        for (std::uint32_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].alive) alive.push_back(i);
        std::sort(alive.begin(), alive.end(), [&](std::uint32_t a, std::uint32_t b) {
            return ord_.less(elems_[a].lt, elems_[b].lt);
        });
        // Leads form an antichain here, so one tail-reduction pass of each
        // element against all the others yields the reduced basis.
        GroebnerBasis gb;
        gb.universe = universe;
        gb.order = ord_;
        for (std::uint32_t idx : alive) {
            Terms r = reduce_full(std::move(elems_[idx].poly), nullptr, idx);
            make_monic(r);
            elems_[idx].poly = std::move(r);
        }
        for (std::uint32_t idx : alive)
            gb.basis.push_back(to_polynomial(elems_[idx].poly));
        gb.stats = stats_;
        gb.stats.elapsed_ms = elapsed_ms();
        return gb;
    }

    const MonomialOrder& ord_;
    GbLimits limits_;
    PairStrategy strat_;
    Clock::time_point start_;
    GbStats stats_;
    std::vector<Elem> elems_;
    std::vector<SPair> pairs_;
    std::vector<std::uint32_t> reduce_order_; // alive, by (lead degree, index)
    std::size_t basis_terms_ = 0;
};

} // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
    std::vector<Terms> divisors;
    std::vector<Monomial> lts;
    std::vector<Rational> lcs;
    divisors.reserve(basis.size());
    for (const Polynomial& g : basis) {
        if (g.is_zero()) throw ParameterError("normal form divisors must be nonzero");
        divisors.push_back(to_ascending(g, order));
        lts.push_back(divisors.back().back().mono);
        lcs.push_back(divisors.back().back().coeff);
    }

    Terms work = to_ascending(f, order);
    Terms out_desc, buf;
    while (!work.empty()) {
        const Term& lead = work.back();
        int found = -1;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            if (lts[i].divides(lead.mono)) {
                found = static_cast<int>(i);
                break;
            }
        if (found < 0) {
            out_desc.push_back(std::move(work.back()));
            work.pop_back();
            continue;
        }
        Monomial m = lead.mono.divided_by(lts[found]);
        Rational c = lead.coeff / lcs[found];
        merge_sub(buf, work, divisors[found], m, c, order, 0, nullptr);
        work.swap(buf);
    }
    std::reverse(out_desc.begin(), out_desc.end());
    return to_polynomial(out_desc);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw ParameterError("s-polynomial needs nonzero operands");
    const Term& ltf = f.leading_term(order);
    const Term& ltg = g.leading_term(order);
    Monomial lcm = Monomial::lcm(ltf.mono, ltg.mono);
    Polynomial left =
        Polynomial::term(Rational(1) / ltf.coeff, lcm.divided_by(ltf.mono)) * f;
    Polynomial right =
        Polynomial::term(Rational(1) / ltg.coeff, lcm.divided_by(ltg.mono)) * g;
    return left - right;
}

GbResult buchberger(const Ideal& ideal, const MonomialOrder& order,
                    const GbLimits& limits, PairStrategy strategy) {
    Engine engine(order, limits, strategy);
    return engine.run(ideal.generators, ideal.universe);
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.basis, gb.order).is_zero();
}

UnitResult contains_one(const Ideal& ideal, const GbLimits& limits) {
    GbResult r = buchberger(ideal, MonomialOrder::grevlex(), limits);
    UnitResult out;
    out.outcome = r.outcome;
    out.stats = r.gb.stats;
    if (r.done())
        out.contains_one = r.gb.basis.size() == 1 && r.gb.basis[0].is_constant();
    return out;
}

ElimResult elimination_ideal(const Ideal& ideal, const std::vector<Variable>& keep,
                             const GbLimits& limits) {
    for (Variable v : keep)
        if (!ideal.universe.contains(v))
            throw ParameterError("kept variable outside the ideal's universe: " +
                                 v.name());
    MonomialOrder order = MonomialOrder::elim_keeping(ideal.universe, keep);
    GbResult r = buchberger(ideal, order, limits);
    ElimResult out;
    out.outcome = r.outcome;
    out.stats = r.gb.stats;
    if (!r.done()) {
        out.ideal.universe = VarUniverse::of(keep);
        return out;
    }
    std::vector<Variable> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    std::vector<Polynomial> gens;
    for (const Polynomial& g : r.gb.basis)
        if (g.supported_on(keep_sorted)) gens.push_back(g);
    out.ideal = Ideal::make(VarUniverse::of(keep), std::move(gens),
                            ideal.provenance + "~elim");
    return out;
}

SubsetResult ideal_subset(const Ideal& a, const Ideal& b, const GbLimits& limits) {
    for (const Polynomial& g : a.generators)
        for (Variable v : g.support())
            if (!b.universe.contains(v))
                throw ParameterError(
                    "subset check: left ideal uses a variable outside the right "
                    "ideal's universe: " +
                    v.name());
    GbResult r = buchberger(b, MonomialOrder::grevlex(), limits);
    SubsetResult out;
    out.outcome = r.outcome;
    out.stats = r.gb.stats;
    if (!r.done()) return out;
    out.contained = true;
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        if (!in_ideal(a.generators[i], r.gb)) {
            out.contained = false;
            out.witness = i;
            break;
        }
    }
    return out;
}

} // namespace hedet
