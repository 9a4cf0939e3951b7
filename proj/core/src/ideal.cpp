#include "hedet/ideal.hpp"

#include "hedet/errors.hpp"

namespace hedet {

Ideal Ideal::make(VarUniverse universe, std::vector<Polynomial> generators,
                  std::string provenance) {
    for (const Polynomial& g : generators) {
        if (g.is_zero())
            throw ParameterError("ideal generators must be nonzero: " + provenance);
        for (Variable v : g.support())
            if (!universe.contains(v))
                throw ParameterError("generator uses a variable outside the universe: " +
                                     v.name() + " in " + provenance);
    }
    return Ideal{std::move(universe), std::move(generators), std::move(provenance)};
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    gens.reserve(a.generators.size() * b.generators.size());
    for (const Polynomial& p : a.generators)
        for (const Polynomial& q : b.generators) gens.push_back(p * q);
    std::vector<Variable> vars;
    for (Variable v : a.universe.vars()) vars.push_back(v);
    for (Variable v : b.universe.vars()) vars.push_back(v);
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       a.provenance + "*" + b.provenance);
}

Ideal ideal_sum(std::vector<Ideal> parts, std::string provenance) {
    std::vector<Polynomial> gens;
    std::vector<Variable> vars;
    for (Ideal& part : parts) {
        for (Polynomial& g : part.generators) gens.push_back(std::move(g));
        for (Variable v : part.universe.vars()) vars.push_back(v);
    }
    return Ideal::make(VarUniverse::of(std::move(vars)), std::move(gens),
                       std::move(provenance));
}

} // namespace hedet
