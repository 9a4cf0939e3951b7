#include <doctest.h>

#include <random>

#include "hedet/errors.hpp"
#include "hedet/poly_text.hpp"
#include "hedet/polynomial.hpp"
#include "hedet/variable.hpp"

using namespace hedet;

TEST_CASE("variable factories validate and order by enumeration") {
    Variable e12 = Variable::e(1, 2);
    CHECK(e12.name() == "e_1_2");
    CHECK(Variable::xt(2, 3, 1).name() == "xt_2_3_1");
    CHECK_THROWS_AS(Variable::e(2, 2), ParameterError);
    CHECK_THROWS_AS(Variable::e(0, 1), ParameterError);
    CHECK_THROWS_AS(Variable::xt(3, 2, 1), ParameterError);

    // Enumeration blocks: e < f < x < y < z < xt < yt, index-lex inside.
    CHECK(Variable::e(1, 2) < Variable::e(1, 3));
    CHECK(Variable::e(1, 3) < Variable::e(2, 3));
    CHECK(Variable::e(9, 10) < Variable::f(1, 2));
    CHECK(Variable::f(1, 2) < Variable::x(1));
    CHECK(Variable::x(4) < Variable::y(1));
    CHECK(Variable::y(2) < Variable::z(1, 1));
    CHECK(Variable::z(5, 5) < Variable::xt(1, 2, 1));
    CHECK(Variable::xt(1, 2, 9) < Variable::yt(1, 2, 1));
}

TEST_CASE("variable names round-trip") {
    std::vector<Variable> vars = {
        Variable::e(1, 2),  Variable::f(3, 7),      Variable::x(11),
        Variable::y(2),     Variable::z(4, 9),      Variable::xt(1, 5, 3),
        Variable::yt(2, 3, 11),
    };
    for (Variable v : vars) {
        auto back = Variable::parse(v.name());
        REQUIRE(back.has_value());
        CHECK(*back == v);
    }
    CHECK_FALSE(Variable::parse("w_1").has_value());
    CHECK_FALSE(Variable::parse("e_1").has_value());
    CHECK_FALSE(Variable::parse("e_2_1").has_value());
    CHECK_FALSE(Variable::parse("x_0").has_value());
    CHECK_FALSE(Variable::parse("x_1_2_3_4").has_value());
    CHECK_FALSE(Variable::parse("x_").has_value());
}

TEST_CASE("universe sizes match closed forms") {
    auto binom2 = [](int n) { return n * (n - 1) / 2; };

    CHECK(VarUniverse::w_ring(3, 2, 2).size() == 10);
    // C(n,2) + C(n',2) + n + n' + n n'
    for (int n = 1; n <= 8; ++n)
        for (int np = 1; np <= 8; ++np)
            CHECK(VarUniverse::w_ring(4, n, np).size() ==
                  static_cast<std::size_t>(binom2(n) + binom2(np) + n + np + n * np));
    CHECK(VarUniverse::w_ring(5, 8, 11).size() == 190);
    CHECK(VarUniverse::pair_ring(8, 11).size() == 171);

    // C(n,2)(n+1) + C(n',2)(n'+1) + n n'
    for (int n = 1; n <= 6; ++n)
        for (int np = 1; np <= 6; ++np)
            CHECK(VarUniverse::v_ring(4, n, np).size() ==
                  static_cast<std::size_t>(binom2(n) * (n + 1) +
                                           binom2(np) * (np + 1) + n * np));
    CHECK(VarUniverse::v_ring(3, 4, 4).size() == 76);
    CHECK(VarUniverse::v_ring(3, 4, 5).size() == 110);

    CHECK_THROWS_AS(VarUniverse::w_ring(1, 2, 2), ParameterError);
    CHECK_THROWS_AS(VarUniverse::w_ring(3, 0, 2), ParameterError);
}

TEST_CASE("universe enumeration is sorted and searchable") {
    VarUniverse u = VarUniverse::w_ring(3, 3, 2);
    REQUIRE(u.size() == 3 + 1 + 3 + 2 + 6);
    CHECK(u.vars().front() == Variable::e(1, 2));
    CHECK(u.vars().back() == Variable::z(3, 2));
    CHECK(u.contains(Variable::x(3)));
    CHECK_FALSE(u.contains(Variable::x(4)));
    CHECK(u.index_of(Variable::e(1, 2)) == 0);
    for (std::size_t i = 0; i + 1 < u.size(); ++i)
        CHECK(u.vars()[i] < u.vars()[i + 1]);
}

TEST_CASE("monomial arithmetic") {
    Variable x = Variable::x(1), y = Variable::y(1);
    Monomial x2 = Monomial::of(x, 2);
    Monomial xy = Monomial::of(x).times(Monomial::of(y));
    CHECK(x2.degree() == 2);
    CHECK(xy.degree() == 2);
    CHECK(x2.times(xy).exponent(x) == 3);
    CHECK(Monomial::lcm(x2, xy).exponent(x) == 2);
    CHECK(Monomial::lcm(x2, xy).exponent(y) == 1);
    CHECK(Monomial::coprime(x2, Monomial::of(y, 5)));
    CHECK_FALSE(Monomial::coprime(x2, xy));
    CHECK(xy.divides(x2.times(xy)));
    CHECK_FALSE(x2.divides(xy));
    CHECK(x2.times(xy).divided_by(xy) == x2);
    CHECK(Monomial::one().divides(x2));
    CHECK(Monomial::one().is_one());
}

TEST_CASE("exponent cap trips") {
    std::size_t saved = monomial_exponent_cap();
    monomial_exponent_cap() = 8;
    Monomial m = Monomial::of(Variable::x(1), 8);
    CHECK_THROWS_AS(m.times(Monomial::of(Variable::x(1), 1)), ParameterError);
    monomial_exponent_cap() = saved;
}

TEST_CASE("order axioms and examples") {
    Variable x = Variable::x(1), y = Variable::x(2);
    Monomial one = Monomial::one();
    Monomial mx = Monomial::of(x), my = Monomial::of(y);
    Monomial x2 = Monomial::of(x, 2), y2 = Monomial::of(y, 2);

    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grev = MonomialOrder::grevlex();

    // x > y in the enumeration, so under lex x beats y^2; grevlex grades first.
    CHECK(lex.greater(mx, y2));
    CHECK(grev.greater(y2, mx));
    CHECK(lex.greater(mx, my));
    CHECK(grev.greater(mx, my));
    CHECK(grev.greater(x2, Monomial::of(x).times(Monomial::of(y))));

    for (const MonomialOrder& o : {lex, grev}) {
        CHECK(o.compare(one, mx) == Ordering::LT); // 1 is minimal
        CHECK(o.compare(mx, mx) == Ordering::EQ);
        // multiplicative: a > b implies am > bm
        CHECK(o.greater(x2.times(my), Monomial::of(y, 2).times(my)) ==
              o.greater(x2, y2));
    }
}

TEST_CASE("block elimination order puts eliminated variables first") {
    Variable e = Variable::e(1, 2);
    Variable z = Variable::z(1, 1);
    MonomialOrder ord = MonomialOrder::block_elim({z});
    // Any power of z dominates any monomial in e alone.
    CHECK(ord.greater(Monomial::of(z), Monomial::of(e, 7)));
    CHECK(ord.less(Monomial::of(e, 2), Monomial::of(z)));
    // Within the kept block, grevlex.
    CHECK(ord.greater(Monomial::of(e, 2), Monomial::of(e)));
    CHECK(ord.is_eliminated(z));
    CHECK_FALSE(ord.is_eliminated(e));
}

namespace {

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Variable>& vars,
                       int max_terms, int max_exp) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::vector<Term> terms;
    int tc = term_count(rng);
    for (int t = 0; t < tc; ++t) {
        std::vector<Monomial::Entry> entries;
        for (Variable v : vars) {
            int e = exp(rng);
            if (e > 0) entries.push_back({v, e});
        }
        long c = coeff(rng);
        if (c != 0)
            terms.push_back({Monomial::from_pairs(entries), rat(c, 1 + (t % 3))});
    }
    return Polynomial::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Variable xv = Variable::x(1), yv = Variable::x(2);
    Polynomial x = Polynomial::var(xv), y = Polynomial::var(yv);
    Polynomial p = x * x - y;
    CHECK(p.term_count() == 2);
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + rat(2) * (x * y) + y * y);
    CHECK(Polynomial::constant(0).is_zero());
    CHECK(x.substituted(yv, xv) == x);
    CHECK((x * y).substituted(yv, xv) == x * x);
    CHECK((x - y).substituted(yv, xv).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20260817);
    std::vector<Variable> vars = {Variable::x(1), Variable::x(2), Variable::x(3)};
    for (int round = 0; round < 60; ++round) {
        Polynomial a = random_poly(rng, vars, 5, 3);
        Polynomial b = random_poly(rng, vars, 5, 3);
        Polynomial c = random_poly(rng, vars, 4, 2);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + Polynomial::zero() == a);
        CHECK(a * Polynomial::constant(1) == a);
        CHECK((a * Polynomial::zero()).is_zero());
    }
}

TEST_CASE("leading term under different orders") {
    Variable xv = Variable::x(1), yv = Variable::x(2);
    Polynomial p = Polynomial::var(xv) + Polynomial::var(yv, 2);
    CHECK(p.leading_term(MonomialOrder::lex()).mono == Monomial::of(xv));
    CHECK(p.leading_term(MonomialOrder::grevlex()).mono == Monomial::of(yv, 2));
}

TEST_CASE("text printing examples") {
    Variable e12v = Variable::e(1, 2);
    Polynomial e12 = Polynomial::var(e12v);
    CHECK(to_text(e12 * e12 - e12) == "e_1_2^2 - e_1_2");
    CHECK(to_text(Polynomial::zero()) == "0");
    CHECK(to_text(Polynomial::constant(rat(-3, 2))) == "-3/2");
    Polynomial z = Polynomial::var(Variable::z(1, 1));
    CHECK(to_text(rat(2) * (e12 * z) - Polynomial::constant(1)) ==
          "2*e_1_2*z_1_1 - 1");
}

TEST_CASE("text parsing accepts the grammar") {
    CHECK(parse_polynomial("0").is_zero());
    CHECK(parse_polynomial("  x_1 ") == Polynomial::var(Variable::x(1)));
    CHECK(parse_polynomial("x_1^3 - 1") ==
          Polynomial::var(Variable::x(1), 3) - Polynomial::constant(1));
    CHECK(parse_polynomial("-2/4*x_1") ==
          rat(-1, 2) * Polynomial::var(Variable::x(1)));
    CHECK(parse_polynomial("x_1*x_1") == Polynomial::var(Variable::x(1), 2));
    CHECK(parse_polynomial("3 + xt_2_3_1") ==
          Polynomial::constant(3) + Polynomial::var(Variable::xt(2, 3, 1)));
    CHECK(parse_polynomial("x_1 - x_1").is_zero());
}

TEST_CASE("text parse errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x_1 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("w_1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x_1 x_2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    try {
        parse_polynomial("x_1 + q_2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
}

TEST_CASE("text round-trip on random polynomials") {
    std::mt19937_64 rng(424242);
    std::vector<Variable> vars = {Variable::e(1, 2), Variable::f(2, 5),
                                  Variable::x(3),    Variable::z(2, 2),
                                  Variable::xt(1, 3, 2)};
    for (int round = 0; round < 80; ++round) {
        Polynomial p = random_poly(rng, vars, 6, 4);
        CHECK(parse_polynomial(to_text(p)) == p);
    }
}

TEST_CASE("line-based ideal text parsing") {
    auto polys = parse_polynomial_lines("# comment\nx_1 - 1\n\n  z_1_1^2 - 1\n");
    REQUIRE(polys.size() == 2);
    CHECK(polys[0] == Polynomial::var(Variable::x(1)) - Polynomial::constant(1));
}
