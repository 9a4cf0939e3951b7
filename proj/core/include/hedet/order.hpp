#pragma once

#include <string>
#include <vector>

#include "hedet/monomial.hpp"
#include "hedet/variable.hpp"

namespace hedet {

enum class Ordering { LT, EQ, GT };

// Total monomial orders over the global variable enumeration (earlier
// variables in Variable's natural order are greater). block_elim is the
// product order that makes every monomial touching an eliminated variable
// greater than every monomial in the kept variables, with graded reverse
// lexicographic ties inside each block; it is the elimination order used for
// computing ideal intersections with subrings.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, block_elim };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    static MonomialOrder block_elim(std::vector<Variable> eliminated);
    // Convenience: eliminate everything in `universe` that is not in `keep`.
    static MonomialOrder elim_keeping(const VarUniverse& universe,
                                      const std::vector<Variable>& keep);

    Kind kind() const { return kind_; }
    const std::vector<Variable>& eliminated() const { return eliminated_; }
    bool is_eliminated(Variable v) const;

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::LT;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::GT;
    }

    std::string describe() const;
    bool operator==(const MonomialOrder&) const = default;

private:
    Kind kind_ = Kind::grevlex;
    std::vector<Variable> eliminated_; // sorted, only for block_elim
};

} // namespace hedet
